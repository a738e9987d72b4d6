"""Independent checks that a computed basis really is a reduced Gröbner
basis of its input: every pairwise s-polynomial reduces to zero, every
member is monic and a fixed point of reduction by the others, and every
input polynomial reduces to zero (the ideal was not enlarged or lost).

Only polynomial-level primitives are used here; nothing is shared with the
engine's pair bookkeeping, so the checks stay an independent witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .polynomials import normal_form, s_polynomial
from .rationals import Backend


def _exact(F):
    """Re-home a basis into arbitrary-precision arithmetic: the checks are
    statements about the answer, and must not fail merely because a 64-bit
    checker cannot re-derive what a 64-bit engine produced."""
    if not F or F[0].ring.backend is Backend.BIG:
        return list(F)
    ring = F[0].ring.with_backend(Backend.BIG)
    return [f.cast_to(ring) for f in F]


def check_groebner(F):
    """(ok, witnesses): every s-polynomial of basis members reduces to 0."""
    F = _exact(F)
    witnesses = []
    for i in range(len(F)):
        for j in range(i + 1, len(F)):
            if normal_form(F, s_polynomial(F[i], F[j])):
                witnesses.append((i, j))
    return not witnesses, witnesses


def check_reduced(F):
    """(ok, witnesses): members are monic and irreducible by the others."""
    F = _exact(F)
    witnesses = []
    for i, f in enumerate(F):
        lc = f.lead_coeff
        if lc.num != 1 or lc.den != 1:
            witnesses.append(i)
            continue
        others = F[:i] + F[i + 1 :]
        if normal_form(others, f) != f:
            witnesses.append(i)
    return not witnesses, witnesses


def check_ideal_preserved(system, F):
    """(ok, witnesses): every input polynomial reduces to 0 modulo F."""
    if not F:
        return False, list(range(len(system.polynomials)))
    F = _exact(F)
    ring = F[0].ring
    witnesses = []
    for idx, raw in enumerate(system.polynomials):
        p = ring.from_exponent_terms(raw)
        if normal_form(F, p):
            witnesses.append(idx)
    return not witnesses, witnesses


@dataclass
class VerifyReport:
    groebner_ok: bool
    reduced_ok: bool
    ideal_ok: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return self.groebner_ok and self.reduced_ok and self.ideal_ok

    def render(self):
        def mark(flag):
            return "ok" if flag else "FAIL"

        lines = [
            f"groebner condition (s-polynomials reduce to zero): {mark(self.groebner_ok)}",
            f"reducedness (monic, irreducible by the rest):      {mark(self.reduced_ok)}",
            f"ideal preserved (input reduces to zero):           {mark(self.ideal_ok)}",
        ]
        for condition, witness in self.failures:
            lines.append(f"  witness [{condition}]: {witness}")
        return "\n".join(lines)

    def to_dict(self):
        return {
            "groebner_ok": self.groebner_ok,
            "reduced_ok": self.reduced_ok,
            "ideal_ok": self.ideal_ok,
            "failures": [
                {"condition": c, "witness": list(w) if isinstance(w, tuple) else w}
                for c, w in self.failures
            ],
        }


def verify_result(system, result):
    """Run all three checks on an engine result for the given input system."""
    F = result.basis
    g_ok, g_wit = check_groebner(F)
    r_ok, r_wit = check_reduced(F)
    i_ok, i_wit = check_ideal_preserved(system, F)
    failures = (
        [("groebner", w) for w in g_wit]
        + [("reduced", w) for w in r_wit]
        + [("ideal", w) for w in i_wit]
    )
    return VerifyReport(g_ok, r_ok, i_ok, failures)
