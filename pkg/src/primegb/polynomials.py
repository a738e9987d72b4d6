"""Polynomials as descending monomial lists under an active term order."""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from time import perf_counter
from typing import NamedTuple

from .errors import EngineTimeout, ZeroPolynomial
from .powerprods import (
    Ordering,
    PowerProduct,
    Rep,
    VarTable,
    make_comparator,
    make_ops,
    make_sort_key,
    natural_rep,
)
from .rationals import Backend, Rational


class Ring:
    """Arithmetic context: variables, power-product representation, term
    order and coefficient backend.  Polynomials carry a reference to theirs.
    """

    __slots__ = (
        "vartable",
        "rep",
        "ordering",
        "backend",
        "ops",
        "cmp_pp",
        "sort_key",
        "rational_type",
        "int_ordered",
    )

    def __init__(self, vartable, ordering=Ordering.PRIME_BASED, rep=None, backend=Backend.BIG):
        if rep is None:
            rep = natural_rep(ordering)
        self.vartable = vartable
        self.rep = rep
        self.ordering = ordering
        self.backend = backend
        self.ops = make_ops(vartable, rep)
        self.cmp_pp = make_comparator(self.ops, ordering)
        self.sort_key = make_sort_key(self.ops, ordering)
        self.rational_type = backend.rational_type
        # Prime images under the prime-based order compare as plain ints,
        # which unlocks inlined comparisons in the hot merge loop.
        self.int_ordered = ordering is Ordering.PRIME_BASED and rep is Rep.PRIME

    def compatible(self, other):
        return (
            self.vartable == other.vartable
            and self.rep is other.rep
            and self.ordering is other.ordering
            and self.backend is other.backend
        )

    def rational(self, num, den=1):
        return self.rational_type(num, den)

    def coeff(self, value):
        """Coerce an int, Fraction or Rational into this ring's backend."""
        if isinstance(value, Rational):
            if isinstance(value, self.rational_type):
                return value
            return self.rational_type(value.num, value.den)
        if isinstance(value, Fraction):
            return self.rational_type(value.numerator, value.denominator)
        return self.rational_type(value)

    def pp(self, exps):
        return self.ops.from_exponents(exps)

    def zero(self):
        return Polynomial(self, ())

    def from_exponent_terms(self, terms):
        """Build a polynomial from (coefficient, exponent-tuple) pairs.

        Coefficients may be ints, Fractions or Rationals; duplicate power
        products are combined and zero coefficients dropped.
        """
        acc = {}
        for coeff, exps in terms:
            raw = self.ops.from_exponents(exps)
            c = self.coeff(coeff)
            if raw in acc:
                acc[raw] = acc[raw] + c
            else:
                acc[raw] = c
        out = [(raw, c) for raw, c in acc.items() if c.num]
        out.sort(key=cmp_to_key(lambda a, b: self.cmp_pp(a[0], b[0])), reverse=True)
        return Polynomial(self, tuple(out))

    def parse(self, text):
        """Parse one polynomial in the corpus grammar into this ring."""
        from .corpus import parse_polynomial

        return self.from_exponent_terms(parse_polynomial(text, self.vartable))

    def with_backend(self, backend):
        if backend is self.backend:
            return self
        return Ring(self.vartable, self.ordering, rep=self.rep, backend=backend)

    def __repr__(self):
        return (
            f"Ring({self.vartable.order_label!r}, {self.ordering.value}, "
            f"{self.rep.value}, {self.backend.value})"
        )


class Monomial(NamedTuple):
    coeff: Rational
    pp: PowerProduct

    def __str__(self):
        return f"({self.coeff}, {self.pp})"


class Polynomial:
    """Immutable list of (raw power product, coefficient) terms, strictly
    descending under the ring's ordering; the zero polynomial is empty."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    @property
    def lead_pp(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading power product")
        return self.terms[0][0]

    @property
    def lead_coeff(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def leading_monomial(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        raw, c = self.terms[0]
        return Monomial(c, PowerProduct(self.ring.ops, raw))

    def monomials(self):
        ops = self.ring.ops
        return [Monomial(c, PowerProduct(ops, raw)) for raw, c in self.terms]

    def __neg__(self):
        return Polynomial(self.ring, tuple((p, -c) for p, c in self.terms))

    def __add__(self, other):
        return Polynomial(self.ring, tuple(_merge(self.ring, self.terms, 0, other.terms)))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        if not factor.num:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((p, factor * c) for p, c in self.terms))

    def mul_monomial(self, coeff, pp):
        """Multiply by one monomial; order is preserved because the term
        order is admissible (s < t implies s*u < t*u)."""
        if not coeff.num:
            return self.ring.zero()
        if isinstance(pp, PowerProduct):
            pp = pp.raw
        mul = self.ring.ops.mul
        return Polynomial(
            self.ring, tuple((mul(pp, p), coeff * c) for p, c in self.terms)
        )

    def make_monic(self):
        if not self.terms:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lc = self.terms[0][1]
        if lc.num == 1 and lc.den == 1:
            return self
        return Polynomial(self.ring, tuple((p, c / lc) for p, c in self.terms))

    def total_degree(self):
        tdeg = self.ring.ops.total_degree
        return max(tdeg(p) for p, _ in self.terms) if self.terms else 0

    def cast_to(self, ring):
        """Same polynomial under another ring sharing variables, order and
        representation (typically a backend change)."""
        if ring is self.ring:
            return self
        rat = ring.rational
        return Polynomial(ring, tuple((p, rat(c.num, c.den)) for p, c in self.terms))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms and self.ring.compatible(other.ring)

    def __hash__(self):
        return hash(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.vartable.names
        exps = self.ring.ops.exponents
        parts = []
        for i, (p, c) in enumerate(self.terms):
            mag = c if c.num > 0 else -c
            pp_txt = ""
            e = exps(p)
            if any(e):
                pp_txt = "".join(
                    n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
                )
                coeff_txt = "" if mag.num == 1 and mag.den == 1 else str(mag)
            else:
                coeff_txt = str(mag)
            if i == 0:
                sign = "-" if c.num < 0 else ""
            else:
                sign = " - " if c.num < 0 else " + "
            parts.append(f"{sign}{coeff_txt}{pp_txt}")
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"

    def validate(self):
        """Structural invariants; used by tests after every kind of operation."""
        cmp = self.ring.cmp_pp
        for p, c in self.terms:
            assert c.num != 0, "stored zero coefficient"
            assert isinstance(c, self.ring.rational_type), "backend mismatch"
        for a, b in zip(self.terms, self.terms[1:]):
            assert cmp(a[0], b[0]) > 0, "terms not strictly descending"
        return True


def _merge(ring, A, ai, B):
    """Sum of two descending term lists, A[ai:] + B, as a new list.

    B already carries the signs it should contribute.  Exact cancellations
    are dropped, so the result never stores zero coefficients.
    """
    la, lb = len(A), len(B)
    if not lb:
        return list(A[ai:])
    if ai >= la:
        return list(B)
    out = []
    j = 0
    if ring.int_ordered:
        while ai < la and j < lb:
            ta = A[ai]
            tb = B[j]
            pa = ta[0]
            pb = tb[0]
            if pa > pb:
                out.append(ta)
                ai += 1
            elif pa < pb:
                out.append(tb)
                j += 1
            else:
                c = ta[1] + tb[1]
                if c.num:
                    out.append((pa, c))
                ai += 1
                j += 1
    else:
        cmp = ring.cmp_pp
        while ai < la and j < lb:
            ta = A[ai]
            tb = B[j]
            d = cmp(ta[0], tb[0])
            if d > 0:
                out.append(ta)
                ai += 1
            elif d < 0:
                out.append(tb)
                j += 1
            else:
                c = ta[1] + tb[1]
                if c.num:
                    out.append((ta[0], c))
                ai += 1
                j += 1
    if ai < la:
        out.extend(A[ai:])
    elif j < lb:
        out.extend(B[j:])
    return out


def _reduce(ring, reducers, terms, deadline=None):
    """Fully reduce a descending term list against (lead_pp, terms) reducers.

    The highest still-reducible term is rewritten each step and the first
    divisor in reducer-list order wins, so the procedure is deterministic.
    Emitted (irreducible) terms only ever decrease, hence arrive sorted.
    """
    ops = ring.ops
    divides = ops.divides
    div = ops.div
    mul = ops.mul
    out = []
    work = terms
    pos = 0
    while pos < len(work):
        if deadline is not None and perf_counter() > deadline:
            raise EngineTimeout("reduction exceeded the time limit")
        hpp, hc = work[pos]
        hit = None
        for lpp, rterms in reducers:
            if divides(lpp, hpp):
                hit = (lpp, rterms)
                break
        if hit is None:
            out.append(work[pos])
            pos += 1
            continue
        lpp, rterms = hit
        m = div(hpp, lpp)
        lc = rterms[0][1]
        q = hc if (lc.num == 1 and lc.den == 1) else hc / lc
        nq = -q
        body = [(mul(m, p), nq * c) for p, c in rterms[1:]]
        work = _merge(ring, work, pos + 1, body)
        pos = 0
    return out


def _integer_content(terms):
    """gcd of the integer numerators of a term list (denominators all 1)."""
    g = 0
    for _, c in terms:
        g = gcd(g, c.num)
        if g == 1:
            return 1
    return g


def _make_primitive(ring, terms):
    """Scale a term list to integer coefficients with content 1 and a
    positive leading coefficient.  The scaling factor is an exact positive
    rational, so divisibility structure and term order are untouched."""
    if not terms:
        return terms
    lcm_den = 1
    for _, c in terms:
        d = c.den
        if d != 1:
            lcm_den = lcm_den // gcd(lcm_den, d) * d
    if lcm_den != 1:
        k = ring.rational(lcm_den)
        terms = [(p, c * k) for p, c in terms]
    content = _integer_content(terms)
    if terms[0][1].num < 0:
        content = -content
    if content != 1:
        k = ring.rational(1, content)
        terms = [(p, c * k) for p, c in terms]
    return terms


def _ff_reduce(ring, reducers, terms, deadline=None):
    """Fraction-free variant of ``_reduce`` for engine-internal use.

    Reducers must be primitive integer polynomials.  Instead of dividing by
    leading coefficients, the working polynomial is cross-scaled by integer
    factors, so coefficients stay integers; the result is the exact normal
    form up to a positive rational factor, returned in primitive form.

    Content is stripped after every step under the checked 64-bit backend
    (each strip buys survival range); under arbitrary precision the result
    is scale-invariant anyway, so stripping is deferred until the scale
    factors accumulated since the last strip reach 64 bits, which avoids
    most of the giant-integer gcd work on coefficient-heavy systems.
    """
    ops = ring.ops
    divides = ops.divides
    div = ops.div
    mul = ops.mul
    rat = ring.rational
    eager = ring.backend is Backend.FIXED64
    out = []
    work = _make_primitive(ring, terms)
    pos = 0
    junk_bits = 0
    while pos < len(work):
        if deadline is not None and perf_counter() > deadline:
            raise EngineTimeout("reduction exceeded the time limit")
        hpp, hc = work[pos]
        hit = None
        for lpp, rterms in reducers:
            if divides(lpp, hpp):
                hit = (lpp, rterms)
                break
        if hit is None:
            out.append(work[pos])
            pos += 1
            continue
        lpp, rterms = hit
        m = div(hpp, lpp)
        lc = rterms[0][1].num
        g = gcd(hc.num, lc)
        scale = lc // g
        if scale != 1:
            k = rat(scale)
            out = [(p, c * k) for p, c in out]
            # work[:pos] duplicates terms already copied to out and is
            # discarded by the merge below; only the live tail is scaled
            work = work[:pos] + [(p, c * k) for p, c in work[pos:]]
            junk_bits += scale.bit_length()
        factor = rat(-(hc.num // g))
        body = [(mul(m, p), factor * c) for p, c in rterms[1:]]
        work = _merge(ring, work, pos + 1, body)
        pos = 0
        if eager or junk_bits >= 64:
            content = _integer_content(out + work)
            if content not in (0, 1):
                k = rat(1, content)
                out = [(p, c * k) for p, c in out]
                work = [(p, c * k) for p, c in work]
            junk_bits = 0
    if not out:
        return []
    return _make_primitive(ring, out)


def s_polynomial_primitive(f_terms, g_terms, ring):
    """Integer cross-multiplied s-polynomial of primitive term lists: equal
    to the rational s-polynomial up to a positive factor."""
    ops = ring.ops
    fpp, fc = f_terms[0]
    gpp, gc = g_terms[0]
    big = ops.lcm(fpp, gpp)
    gg = gcd(fc.num, gc.num)
    mf, mg = ops.div(big, fpp), ops.div(big, gpp)
    mul = ops.mul
    ka = ring.rational(gc.num // gg)
    kb = ring.rational(-(fc.num // gg))
    a = [(mul(mf, p), ka * c) for p, c in f_terms]
    b = [(mul(mg, p), kb * c) for p, c in g_terms]
    return _merge(ring, a, 0, b)


def s_polynomial(f, g):
    """Cross-cancellation of the leading terms over their lcm."""
    if not f.terms or not g.terms:
        raise ZeroPolynomial("s-polynomial of the zero polynomial")
    ring = f.ring
    ops = ring.ops
    fpp, fc = f.terms[0]
    gpp, gc = g.terms[0]
    big = ops.lcm(fpp, gpp)
    one = ring.rational(1)
    a = f.mul_monomial(one / fc, ops.div(big, fpp))
    b = g.mul_monomial(-(one / gc), ops.div(big, gpp))
    return a + b


def normal_form(F, p):
    """Remainder of p after exhaustive reduction by the list F.

    Every term of the result is irreducible by every leading power product
    in F (full tail reduction), and p minus the result lies in the ideal
    generated by F.
    """
    reducers = [(f.terms[0][0], f.terms) for f in F if f.terms]
    return Polynomial(p.ring, tuple(_reduce(p.ring, reducers, list(p.terms))))
