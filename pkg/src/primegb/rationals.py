"""Exact rational coefficients with two interchangeable integer backends.

``BigRational`` rests on Python's unbounded integers.  ``Rational64`` mimics a
machine-width implementation: every intermediate product and sum is checked
against the signed 64-bit range and raises ``CoefficientOverflow`` instead of
wrapping.  Values are immutable, always in lowest terms with a positive
denominator; zero is canonically 0/1.
"""

from __future__ import annotations

import enum
import re
from math import gcd

from .errors import CoefficientOverflow

I64_MAX = 2**63 - 1
I64_MIN = -(2**63)

_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?$")


def _fit(v):
    """Pass v through unless it leaves the signed 64-bit range."""
    if v > I64_MAX or v < I64_MIN:
        raise CoefficientOverflow(f"64-bit coefficient range exceeded by {v}")
    return v


class Rational:
    """num/den in lowest terms with den > 0; subclasses pick the integer width."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if den == 0:
            raise ZeroDivisionError("rational with zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        self._store(num, den)

    def _store(self, num, den):
        raise NotImplementedError

    @classmethod
    def _raw(cls, num, den):
        # Internal fast path: num/den must already be canonical.
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    def is_zero(self):
        return self.num == 0

    def __bool__(self):
        return self.num != 0

    def __eq__(self, other):
        if isinstance(other, Rational):
            return self.num == other.num and self.den == other.den
        if isinstance(other, int):
            return self.den == 1 and self.num == other
        return NotImplemented

    def __hash__(self):
        return hash(self.num) if self.den == 1 else hash((self.num, self.den))

    def __str__(self):
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"

    def __repr__(self):
        return f"{type(self).__name__}({self.num}, {self.den})"


class BigRational(Rational):
    """Arbitrary-precision backend."""

    __slots__ = ()

    def _store(self, num, den):
        self.num = num
        self.den = den

    def __neg__(self):
        return BigRational._raw(-self.num, self.den)

    def __add__(self, other):
        an, ad = self.num, self.den
        bn, bd = other.num, other.den
        g = gcd(ad, bd)
        if g == 1:
            return BigRational._raw(an * bd + bn * ad, ad * bd)
        a2 = ad // g
        t = an * (bd // g) + bn * a2
        g2 = gcd(t, g)
        return BigRational._raw(t // g2, a2 * (bd // g2))

    def __sub__(self, other):
        an, ad = self.num, self.den
        bn, bd = other.num, other.den
        g = gcd(ad, bd)
        if g == 1:
            return BigRational._raw(an * bd - bn * ad, ad * bd)
        a2 = ad // g
        t = an * (bd // g) - bn * a2
        g2 = gcd(t, g)
        return BigRational._raw(t // g2, a2 * (bd // g2))

    def __mul__(self, other):
        an, ad = self.num, self.den
        bn, bd = other.num, other.den
        g1 = gcd(an, bd)
        g2 = gcd(bn, ad)
        return BigRational._raw((an // g1) * (bn // g2), (ad // g2) * (bd // g1))

    def __truediv__(self, other):
        bn, bd = other.num, other.den
        if bn == 0:
            raise ZeroDivisionError("division by zero rational")
        an, ad = self.num, self.den
        g1 = gcd(an, bn)
        g2 = gcd(ad, bd)
        num = (an // g1) * (bd // g2)
        den = (ad // g2) * (bn // g1)
        if den < 0:
            num, den = -num, -den
        return BigRational._raw(num, den)


class Rational64(Rational):
    """Checked 64-bit backend; overflow is always signalled, never silent."""

    __slots__ = ()

    def _store(self, num, den):
        self.num = _fit(num)
        self.den = _fit(den)

    def __neg__(self):
        return Rational64._raw(_fit(-self.num), self.den)

    def __add__(self, other):
        an, ad = self.num, self.den
        bn, bd = other.num, other.den
        g = gcd(ad, bd)
        if g == 1:
            num = _fit(_fit(an * bd) + _fit(bn * ad))
            return Rational64._raw(num, _fit(ad * bd))
        a2 = ad // g
        t = _fit(_fit(an * (bd // g)) + _fit(bn * a2))
        g2 = gcd(t, g)
        return Rational64._raw(t // g2, _fit(a2 * (bd // g2)))

    def __sub__(self, other):
        an, ad = self.num, self.den
        bn, bd = other.num, other.den
        g = gcd(ad, bd)
        if g == 1:
            num = _fit(_fit(an * bd) - _fit(bn * ad))
            return Rational64._raw(num, _fit(ad * bd))
        a2 = ad // g
        t = _fit(_fit(an * (bd // g)) - _fit(bn * a2))
        g2 = gcd(t, g)
        return Rational64._raw(t // g2, _fit(a2 * (bd // g2)))

    def __mul__(self, other):
        an, ad = self.num, self.den
        bn, bd = other.num, other.den
        g1 = gcd(an, bd)
        g2 = gcd(bn, ad)
        return Rational64._raw(
            _fit((an // g1) * (bn // g2)), _fit((ad // g2) * (bd // g1))
        )

    def __truediv__(self, other):
        bn, bd = other.num, other.den
        if bn == 0:
            raise ZeroDivisionError("division by zero rational")
        an, ad = self.num, self.den
        g1 = gcd(an, bn)
        g2 = gcd(ad, bd)
        num = _fit((an // g1) * (bd // g2))
        den = _fit((ad // g2) * (bn // g1))
        if den < 0:
            num, den = _fit(-num), -den
        return Rational64._raw(num, den)


class Backend(enum.Enum):
    """Which integer width backs rational arithmetic."""

    FIXED64 = "i64"
    BIG = "big"

    @property
    def rational_type(self):
        return Rational64 if self is Backend.FIXED64 else BigRational


def make_rational(num, den=1, backend=Backend.BIG):
    return backend.rational_type(num, den)


def parse_rational(text, backend=Backend.BIG):
    """Parse "p", "-p" or "p/q" into a rational of the requested backend."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"invalid rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return backend.rational_type(num, den)
