"""Reduced Gröbner bases via Buchberger's algorithm with pair criteria.

The engine keeps the working basis fully auto-reduced while critical pairs
are processed: inserting a polynomial displaces members whose leading power
product it divides and rewrites tails it can reduce.  Polynomials
regenerated by that maintenance re-enter pair bookkeeping exactly like fresh
reductions; skipping that update is a classic source of wrong bases and can
be reproduced through the ``newbasis_pair_update`` test hook.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heappop, heappush
from time import perf_counter

from .corpus import PolySystem
from .errors import EngineTimeout
from .polynomials import (
    Polynomial,
    Ring,
    _ff_reduce,
    _reduce,
    normal_form,
    s_polynomial,
    s_polynomial_primitive,
)
from .powerprods import Ordering
from .rationals import Backend


@dataclass(frozen=True)
class CriticalPair:
    """Index pair i < j into a basis list, with the lcm of the leading
    power products cached at creation time (raw representation value)."""

    i: int
    j: int
    lcm_pp: object


def make_pair(basis, i, j):
    if not i < j:
        raise ValueError("critical pair wants i < j")
    ops = basis[i].ring.ops
    return CriticalPair(i, j, ops.lcm(basis[i].lead_pp, basis[j].lead_pp))


def criterion_coprime(pair, basis):
    """Skip a pair whose leading power products share no variable: their
    s-polynomial always reduces to zero."""
    ops = basis[pair.i].ring.ops
    return ops.coprime(basis[pair.i].lead_pp, basis[pair.j].lead_pp)


def criterion_chain(pair, pending, basis):
    """Skip a pair bridged by a third basis member: lead(k) divides the
    cached lcm and both connecting pairs are done or were never queued."""
    divides = basis[pair.i].ring.ops.divides
    i, j = pair.i, pair.j
    for k in range(len(basis)):
        if k == i or k == j:
            continue
        if divides(basis[k].lead_pp, pair.lcm_pp):
            a = (i, k) if i < k else (k, i)
            if a in pending:
                continue
            b = (j, k) if j < k else (k, j)
            if b in pending:
                continue
            return True
    return False


def update_pairs(basis, pairs, new_poly):
    """Pairs after appending new_poly to the basis: one (k, new_index)
    candidate per existing member, dropped at creation when the leading
    power products are coprime (their s-polynomial reduces to zero anyway).
    The chain criterion is applied later, when a pair is selected, because
    its verdict depends on what is still pending."""
    n = len(basis)
    ops = new_poly.ring.ops
    lead = new_poly.lead_pp
    out = set(pairs)
    for k, g in enumerate(basis):
        if ops.coprime(g.lead_pp, lead):
            continue
        out.add((k, n))
    return out


@dataclass
class GroebnerStats:
    pairs_created: int = 0
    pairs_skipped_coprime: int = 0
    pairs_considered: int = 0
    pairs_skipped_chain: int = 0
    reductions_to_zero: int = 0
    basis_additions: int = 0
    displaced: int = 0
    tail_rewrites: int = 0

    def summary(self):
        return (
            f"pairs created {self.pairs_created}, coprime-skipped "
            f"{self.pairs_skipped_coprime}, considered {self.pairs_considered}, "
            f"chain-skipped {self.pairs_skipped_chain}, zero reductions "
            f"{self.reductions_to_zero}, basis additions {self.basis_additions}, "
            f"displaced {self.displaced}, tail rewrites {self.tail_rewrites}"
        )


@dataclass
class GroebnerResult:
    basis: list
    stats: GroebnerStats
    duration_ms: float
    ring: Ring

    @property
    def basis_size(self):
        return len(self.basis)

    def render(self):
        return "\n".join(str(f) for f in self.basis)


def inter_reduce(polys):
    """Minimal, fully tail-reduced, monic form of a polynomial list.

    Drops members whose leading power product another member's divides,
    then reduces every survivor against the rest until nothing changes.
    """
    items = [p for p in polys if p]
    if not items:
        return []
    ring = items[0].ring
    divides = ring.ops.divides
    minimal = []
    for i, f in enumerate(items):
        fl = f.lead_pp
        redundant = False
        for j, g in enumerate(items):
            if i == j:
                continue
            gl = g.lead_pp
            if divides(gl, fl) and (gl != fl or j < i):
                redundant = True
                break
        if not redundant:
            minimal.append(f.make_monic())
    basis = minimal
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1 :]
            r = normal_form(others, basis[i])
            if r != basis[i]:
                basis[i] = r.make_monic()
                changed = True
    return basis


class _Engine:
    def __init__(self, ring, *, use_coprime, use_chain, newbasis_pair_update, deadline):
        self.ring = ring
        self.use_coprime = use_coprime
        self.use_chain = use_chain
        self.newbasis_pair_update = newbasis_pair_update
        self.deadline = deadline
        # Under checked 64-bit coefficients the basis is kept in primitive
        # integer form and reduction is fraction-free: monic members would
        # force rational tails whose denominators compound and exhaust the
        # range on systems it should survive.  Under arbitrary precision the
        # classic monic convention is kept; each coefficient then stays at
        # its individually smallest value, which measures faster on the
        # coefficient-heavy systems.  Both modes walk the same reduction
        # sequence (scale never affects divisibility), so bases and
        # statistics agree wherever both complete.
        self.primitive_mode = ring.backend is Backend.FIXED64
        self.polys = []  # every polynomial ever installed; dead slots kept
        self.alive = []  # ascending indices of current members
        self.reducers = []  # parallel to alive: (lead_pp, terms)
        self.pending = set()
        self.heap = []
        self.queue = []  # polynomials awaiting (re)insertion
        self.stats = GroebnerStats()

    def _normal_form_terms(self, terms):
        if self.primitive_mode:
            return _ff_reduce(self.ring, self.reducers, terms, self.deadline)
        terms = _reduce(self.ring, self.reducers, terms, self.deadline)
        if terms:
            lc = terms[0][1]
            if lc.num != 1 or lc.den != 1:
                terms = [(pp, c / lc) for pp, c in terms]
        return terms

    def _s_poly_terms(self, i, j):
        if self.primitive_mode:
            return s_polynomial_primitive(
                self.polys[i].terms, self.polys[j].terms, self.ring
            )
        return list(s_polynomial(self.polys[i], self.polys[j]).terms)

    def _kill(self, k):
        i = self.alive.index(k)
        self.alive.pop(i)
        self.reducers.pop(i)
        if self.pending:
            self.pending = {pr for pr in self.pending if k not in pr}

    def _update_pairs(self, n, lead):
        ops = self.ring.ops
        key = self.ring.sort_key
        stats = self.stats
        for pos, k in enumerate(self.alive):
            gl = self.reducers[pos][0]
            stats.pairs_created += 1
            if self.use_coprime and ops.coprime(gl, lead):
                stats.pairs_skipped_coprime += 1
                continue
            big = ops.lcm(gl, lead)
            self.pending.add((k, n))
            heappush(self.heap, (key(big), k, n, big))

    def _absorb(self, p, regenerated):
        """Reduce p against the basis and, if nonzero, install it.

        Installation keeps the basis auto-reduced: members whose lead the
        newcomer divides are pulled out for re-reduction, members with a
        newly reducible tail are rewritten.  Either way the changed
        polynomial re-enters pair bookkeeping (unless the pair-update hook
        is off, which reproduces the classic omission).
        """
        self.queue.append((p, regenerated))
        while self.queue:
            cand, regen = self.queue.pop(0)
            terms = self._normal_form_terms(list(cand.terms))
            if not terms:
                continue
            h = Polynomial(self.ring, tuple(terms))
            n = len(self.polys)
            self.polys.append(h)
            if self.newbasis_pair_update or not regen:
                self._update_pairs(n, terms[0][0])
            self.alive.append(n)
            self.reducers.append((terms[0][0], h.terms))
            self.stats.basis_additions += 1

            # Maintenance against the fresh leading power product.
            lead = terms[0][0]
            divides = self.ring.ops.divides
            displaced = [
                k
                for pos, k in enumerate(self.alive[:-1])
                if divides(lead, self.reducers[pos][0])
            ]
            for k in displaced:
                g = self.polys[k]
                self._kill(k)
                self.stats.displaced += 1
                self.queue.append((g, True))
            for k in list(self.alive):
                if k == n:
                    continue
                g = self.polys[k]
                if any(divides(lead, pp) for pp, _ in g.terms[1:]):
                    self._kill(k)
                    self.stats.tail_rewrites += 1
                    self.queue.append((g, True))

    def _chain_applies(self, i, j, big):
        divides = self.ring.ops.divides
        pending = self.pending
        for pos, k in enumerate(self.alive):
            if k == i or k == j:
                continue
            if divides(self.reducers[pos][0], big):
                a = (i, k) if i < k else (k, i)
                if a in pending:
                    continue
                b = (j, k) if j < k else (k, j)
                if b in pending:
                    continue
                return True
        return False

    def _process_pairs(self):
        deadline = self.deadline
        while self.heap:
            if deadline is not None and perf_counter() > deadline:
                raise EngineTimeout("pair processing exceeded the time limit")
            _, i, j, big = heappop(self.heap)
            if (i, j) not in self.pending:
                continue
            self.pending.discard((i, j))
            self.stats.pairs_considered += 1
            if self.use_chain and self._chain_applies(i, j, big):
                self.stats.pairs_skipped_chain += 1
                continue
            terms = self._normal_form_terms(self._s_poly_terms(i, j))
            if not terms:
                self.stats.reductions_to_zero += 1
                continue
            self._absorb(Polynomial(self.ring, tuple(terms)), regenerated=False)

    def run(self, seeds):
        for s in seeds:
            if s:
                self._absorb(s, regenerated=False)
        # Alternate pair processing and inter-reduction until both are
        # exhausted.  Auto-reduction makes the final pass a plain no-op
        # check, but a changed basis (defensively) re-enters the loop.
        while True:
            self._process_pairs()
            monic = [self.polys[k].make_monic() for k in self.alive]
            reduced = inter_reduce(monic)
            if reduced == monic:
                break
            for k in list(self.alive):
                self._kill(k)
            for f in reduced:
                self._absorb(f, regenerated=True)
        key = self.ring.sort_key
        return sorted(reduced, key=lambda f: key(f.terms[0][0]))


def groebner_basis(
    ring,
    polys,
    *,
    timeout_s=None,
    use_coprime=True,
    use_chain=True,
    newbasis_pair_update=True,
):
    """Reduced Gröbner basis of a list of ring polynomials, with statistics."""
    t0 = perf_counter()
    deadline = None if timeout_s is None else t0 + timeout_s
    engine = _Engine(
        ring,
        use_coprime=use_coprime,
        use_chain=use_chain,
        newbasis_pair_update=newbasis_pair_update,
        deadline=deadline,
    )
    basis = engine.run(polys)
    duration_ms = (perf_counter() - t0) * 1000.0
    return GroebnerResult(basis, engine.stats, duration_ms, ring)


def compute_groebner(
    system: PolySystem,
    ordering=Ordering.PRIME_BASED,
    backend=Backend.BIG,
    *,
    rep=None,
    timeout_s=None,
    use_coprime=True,
    use_chain=True,
    newbasis_pair_update=True,
):
    """Reduced Gröbner basis of a parsed system under the given order.

    The power-product representation defaults to the ordering's natural one
    (prime images for the prime-based order, expanded strings for total
    degree, exponent vectors for lex) and can be overridden through ``rep``.
    """
    ring = Ring(system.vartable, ordering=ordering, rep=rep, backend=backend)
    seeds = [ring.from_exponent_terms(p) for p in system.polynomials]
    return groebner_basis(
        ring,
        seeds,
        timeout_s=timeout_s,
        use_coprime=use_coprime,
        use_chain=use_chain,
        newbasis_pair_update=newbasis_pair_update,
    )
