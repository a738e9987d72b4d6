"""Power products under three interchangeable representations.

A power product x1^a1 * ... * xn^an is stored either as an expanded,
codepoint-sorted character string ("aaabbc" for a^3 b^2 c), as a tuple of
exponents, or as the unsigned 64-bit integer obtained by raising each
variable's prime to its exponent (the prime image: with x,y,z on 2,3,5 the
product x^3 y^2 z maps to 2^3 * 3^2 * 5 = 360).

The string form does honest iterative work (merges, scans); the prime form
reduces every operation to one or two machine-style integer operations; the
exponent-vector form is the reference the other two are tested against.

Prime images are capped at 64 bits: operations that would need more raise
``ImageOverflow``.  Orderings compare power products mathematically and are
available for every representation, so the vector form can serve as an
unbounded oracle for the prime-based order.
"""

from __future__ import annotations

import enum

from math import gcd, prod

from .errors import ImageOverflow, InvalidPermutation, NotDivisible

U64_MAX = 2**64 - 1

# First 64 primes; far more than any supported variable count needs.
PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
    59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131,
    137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199,
    211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281,
    283, 293, 307, 311,
)


class Rep(enum.Enum):
    """Concrete storage form of a power product."""

    STRING = "string"
    VECTOR = "vector"
    PRIME = "prime"


class Ordering(enum.Enum):
    """Admissible total orders on power products."""

    TOTAL_DEGREE = "deglex"
    PRIME_BASED = "prime"
    LEX = "lex"


def natural_rep(ordering):
    """The representation each ordering is implemented on by default."""
    if ordering is Ordering.PRIME_BASED:
        return Rep.PRIME
    if ordering is Ordering.TOTAL_DEGREE:
        return Rep.STRING
    return Rep.VECTOR


class VarTable:
    """Ordered variable names with their primes: names[i] is backed by the
    (i+1)-th prime, so the name order fixes the prime assignment."""

    __slots__ = ("names", "primes", "_index")

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise ValueError("variable table needs at least one name")
        if len(names) > len(PRIMES):
            raise ValueError(f"at most {len(PRIMES)} variables supported")
        for n in names:
            if len(n) != 1 or not n.isalpha():
                raise ValueError(f"variable names must be single letters: {n!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self.primes = PRIMES[: len(names)]
        self._index = {c: i for i, c in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self._index

    def index(self, name):
        return self._index[name]

    @property
    def order_label(self):
        return "".join(self.names)

    def permuted(self, order):
        """Same variables under a new declared order (hence new primes)."""
        order = tuple(order)
        if sorted(order) != sorted(self.names):
            raise InvalidPermutation(
                f"{''.join(order)!r} is not a permutation of {self.order_label!r}"
            )
        return VarTable(order)

    def __eq__(self, other):
        return isinstance(other, VarTable) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarTable({self.order_label!r})"


def format_exponents(names, exps):
    """Caret rendering: x^3y^2z, exponent 1 omitted, empty product is 1."""
    parts = []
    for name, e in zip(names, exps):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "".join(parts) or "1"


class _OpsBase:
    """Operations over one raw representation, bound to a variable table."""

    __slots__ = ("vt", "one")
    rep = None

    def __init__(self, vt):
        self.vt = vt

    def image64(self, raw):
        n = self.image_unbounded(raw)
        if n > U64_MAX:
            raise ImageOverflow(f"prime image {n} needs more than 64 bits")
        return n

    def coprime(self, a, b):
        return self.gcd(a, b) == self.one


class StringOps(_OpsBase):
    """Expanded strings; every operation iterates over the characters."""

    __slots__ = ("_prime_of",)
    rep = Rep.STRING

    def __init__(self, vt):
        super().__init__(vt)
        self.one = ""
        self._prime_of = {name: p for name, p in zip(vt.names, vt.primes)}

    def from_exponents(self, exps):
        return "".join(sorted("".join(n * e for n, e in zip(self.vt.names, exps))))

    def exponents(self, s):
        return tuple(s.count(n) for n in self.vt.names)

    def total_degree(self, s):
        return len(s)

    def image_unbounded(self, s):
        n = 1
        for ch in s:
            n *= self._prime_of[ch]
        return n

    def mul(self, a, b):
        out = []
        i = j = 0
        la, lb = len(a), len(b)
        while i < la and j < lb:
            x, y = a[i], b[j]
            if x <= y:
                out.append(x)
                i += 1
            else:
                out.append(y)
                j += 1
        if i < la:
            out.append(a[i:])
        elif j < lb:
            out.append(b[j:])
        return "".join(out)

    def divides(self, s, t):
        # s | t over sorted strings: subsequence scan with early exit.
        ls = len(s)
        if ls > len(t):
            return False
        i = 0
        for ch in t:
            if i == ls:
                return True
            c = s[i]
            if ch == c:
                i += 1
            elif ch > c:
                return False
        return i == ls

    def div(self, t, s):
        out = []
        i = 0
        ls = len(s)
        for ch in t:
            if i < ls and ch == s[i]:
                i += 1
            else:
                out.append(ch)
        if i < ls:
            raise NotDivisible(f"{s!r} does not divide {t!r}")
        return "".join(out)

    def lcm(self, a, b):
        out = []
        i = j = 0
        la, lb = len(a), len(b)
        while i < la and j < lb:
            x, y = a[i], b[j]
            if x == y:
                ri = i + 1
                while ri < la and a[ri] == x:
                    ri += 1
                rj = j + 1
                while rj < lb and b[rj] == x:
                    rj += 1
                out.append(x * max(ri - i, rj - j))
                i, j = ri, rj
            elif x < y:
                ri = i + 1
                while ri < la and a[ri] == x:
                    ri += 1
                out.append(a[i:ri])
                i = ri
            else:
                rj = j + 1
                while rj < lb and b[rj] == y:
                    rj += 1
                out.append(b[j:rj])
                j = rj
        out.append(a[i:])
        out.append(b[j:])
        return "".join(out)

    def gcd(self, a, b):
        out = []
        i = j = 0
        la, lb = len(a), len(b)
        while i < la and j < lb:
            x, y = a[i], b[j]
            if x == y:
                ri = i + 1
                while ri < la and a[ri] == x:
                    ri += 1
                rj = j + 1
                while rj < lb and b[rj] == x:
                    rj += 1
                out.append(x * min(ri - i, rj - j))
                i, j = ri, rj
            elif x < y:
                i += 1
            else:
                j += 1
        return "".join(out)

    def coprime(self, a, b):
        i = j = 0
        la, lb = len(a), len(b)
        while i < la and j < lb:
            x, y = a[i], b[j]
            if x == y:
                return False
            if x < y:
                i += 1
            else:
                j += 1
        return True


class VectorOps(_OpsBase):
    """Exponent tuples; the reference representation."""

    __slots__ = ()
    rep = Rep.VECTOR

    def __init__(self, vt):
        super().__init__(vt)
        self.one = (0,) * len(vt)

    def from_exponents(self, exps):
        exps = tuple(exps)
        if len(exps) != len(self.vt):
            raise ValueError("exponent vector length does not match variable table")
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent")
        return exps

    def exponents(self, v):
        return v

    def total_degree(self, v):
        return sum(v)

    def image_unbounded(self, v):
        return prod(p**e for p, e in zip(self.vt.primes, v))

    def mul(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def divides(self, s, t):
        return all(x <= y for x, y in zip(s, t))

    def div(self, t, s):
        out = tuple(x - y for x, y in zip(t, s))
        if any(e < 0 for e in out):
            raise NotDivisible(f"{s} does not divide {t}")
        return out

    def lcm(self, a, b):
        return tuple(max(x, y) for x, y in zip(a, b))

    def gcd(self, a, b):
        return tuple(min(x, y) for x, y in zip(a, b))

    def coprime(self, a, b):
        return all(x == 0 or y == 0 for x, y in zip(a, b))


class PrimeOps(_OpsBase):
    """Unsigned 64-bit prime images; operations are single integer ops."""

    __slots__ = ()
    rep = Rep.PRIME

    def __init__(self, vt):
        super().__init__(vt)
        self.one = 1

    def from_exponents(self, exps):
        n = 1
        for p, e in zip(self.vt.primes, exps):
            if e:
                n *= p**e
        if n > U64_MAX:
            raise ImageOverflow(f"prime image {n} needs more than 64 bits")
        return n

    def exponents(self, v):
        out = []
        for p in self.vt.primes:
            e = 0
            while v % p == 0:
                v //= p
                e += 1
            out.append(e)
        if v != 1:
            raise ValueError(f"leftover factor {v}: value not over this variable table")
        return tuple(out)

    def total_degree(self, v):
        # Trial division over the table's primes.
        d = 0
        for p in self.vt.primes:
            while v % p == 0:
                v //= p
                d += 1
            if v == 1:
                break
        return d

    def image_unbounded(self, v):
        return v

    def mul(self, a, b):
        r = a * b
        if r > U64_MAX:
            raise ImageOverflow(f"prime image {r} needs more than 64 bits")
        return r

    def divides(self, s, t):
        return t % s == 0

    def div(self, t, s):
        q, r = divmod(t, s)
        if r:
            raise NotDivisible(f"{s} does not divide {t}")
        return q

    def lcm(self, a, b):
        r = (a // gcd(a, b)) * b
        if r > U64_MAX:
            raise ImageOverflow(f"prime image {r} needs more than 64 bits")
        return r

    def gcd(self, a, b):
        return gcd(a, b)

    def coprime(self, a, b):
        return gcd(a, b) == 1


_OPS_TYPES = {Rep.STRING: StringOps, Rep.VECTOR: VectorOps, Rep.PRIME: PrimeOps}


def make_ops(vt, rep):
    return _OPS_TYPES[rep](vt)


def make_comparator(ops, ordering):
    """A cmp(a, b) -> -1/0/1 closure over raw values of ops' representation."""
    if ordering is Ordering.PRIME_BASED:
        if ops.rep is Rep.PRIME:

            def cmp(a, b):
                if a < b:
                    return -1
                return 1 if a > b else 0

        else:
            img = ops.image_unbounded

            def cmp(a, b):
                x, y = img(a), img(b)
                if x < y:
                    return -1
                return 1 if x > y else 0

    elif ordering is Ordering.TOTAL_DEGREE:
        tdeg = ops.total_degree
        exps = ops.exponents

        def cmp(a, b):
            da, db = tdeg(a), tdeg(b)
            if da != db:
                return -1 if da < db else 1
            if a == b:
                return 0
            x, y = exps(a), exps(b)
            return -1 if x < y else 1

    else:  # LEX
        exps = ops.exponents

        def cmp(a, b):
            x, y = exps(a), exps(b)
            if x < y:
                return -1
            return 1 if x > y else 0

    return cmp


def make_sort_key(ops, ordering):
    """A key(raw) whose natural '<' agrees with the ordering; used where a
    total key is handier than a comparator (pair queues, final sorting)."""
    if ordering is Ordering.PRIME_BASED:
        return ops.image_unbounded
    if ordering is Ordering.TOTAL_DEGREE:
        tdeg = ops.total_degree
        exps = ops.exponents
        return lambda a: (tdeg(a), exps(a))
    return ops.exponents


class PowerProduct:
    """One power product bound to a variable table and representation.

    Thin convenience wrapper over the raw operation sets; polynomial
    arithmetic works on raw values directly for speed.
    """

    __slots__ = ("ops", "raw")

    def __init__(self, ops, raw):
        self.ops = ops
        self.raw = raw

    @classmethod
    def from_exponents(cls, vt, exps, rep=Rep.VECTOR):
        ops = make_ops(vt, rep)
        return cls(ops, ops.from_exponents(exps))

    @classmethod
    def identity(cls, vt, rep=Rep.VECTOR):
        ops = make_ops(vt, rep)
        return cls(ops, ops.one)

    @property
    def vartable(self):
        return self.ops.vt

    @property
    def rep(self):
        return self.ops.rep

    def exponents(self):
        return self.ops.exponents(self.raw)

    def total_degree(self):
        return self.ops.total_degree(self.raw)

    def prime_image(self):
        return self.ops.image64(self.raw)

    def is_identity(self):
        return self.raw == self.ops.one

    def convert(self, rep):
        if rep is self.rep:
            return self
        return PowerProduct.from_exponents(self.vartable, self.exponents(), rep)

    def _check_compatible(self, other):
        if self.rep is not other.rep or self.vartable != other.vartable:
            raise ValueError("power products from different contexts")

    def mul(self, other):
        self._check_compatible(other)
        return PowerProduct(self.ops, self.ops.mul(self.raw, other.raw))

    __mul__ = mul

    def divides(self, other):
        self._check_compatible(other)
        return self.ops.divides(self.raw, other.raw)

    def div(self, other):
        self._check_compatible(other)
        return PowerProduct(self.ops, self.ops.div(self.raw, other.raw))

    __truediv__ = div

    def lcm(self, other):
        self._check_compatible(other)
        return PowerProduct(self.ops, self.ops.lcm(self.raw, other.raw))

    def gcd(self, other):
        self._check_compatible(other)
        return PowerProduct(self.ops, self.ops.gcd(self.raw, other.raw))

    def compare(self, other, ordering):
        self._check_compatible(other)
        return make_comparator(self.ops, ordering)(self.raw, other.raw)

    def __eq__(self, other):
        if not isinstance(other, PowerProduct):
            return NotImplemented
        if self.vartable != other.vartable:
            return False
        if self.rep is other.rep:
            return self.raw == other.raw
        return self.exponents() == other.exponents()

    def __hash__(self):
        return hash((self.vartable.names, self.exponents()))

    def __str__(self):
        return format_exponents(self.vartable.names, self.exponents())

    def __repr__(self):
        return f"PowerProduct({self.rep.value}, {self})"


def prime_image(t):
    """The 64-bit prime image of a power product; errors past 64 bits."""
    return t.prime_image()


def compare(s, t, ordering):
    """-1/0/1 verdict of the given admissible ordering."""
    return s.compare(t, ordering)
