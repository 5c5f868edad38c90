"""Reduced and full linking systems of difference sets: verification,
interconversion, (mu, nu) arithmetic, and reversibility checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import group_ring as rg
from .designs import DifferenceSetRecord, DSParams, complement, is_difference_set, is_reversible
from .groups import FiniteGroup


@dataclass(frozen=True)
class MuNu:
    mu: int
    nu: int
    upper: bool  # True for the nu = k(k + sqrt(n))/v branch

    def as_tuple(self) -> tuple[int, int]:
        return (self.mu, self.nu)


def mu_nu_candidates(params: DSParams) -> list[MuNu]:
    """Integer (mu, nu) branches allowed by nu = k(k +/- sqrt(n))/v and
    mu = nu -/+ sqrt(n); empty when n is not a perfect square."""
    v, k, _, n = params.as_tuple()
    root = math.isqrt(n)
    if root * root != n:
        return []
    out = []
    for upper, sign in ((True, 1), (False, -1)):
        num = k * (k + sign * root)
        if num % v == 0:
            nu = num // v
            out.append(MuNu(nu - sign * root, nu, upper))
    return out


@dataclass(frozen=True)
class ReducedLinkingSystem:
    """Difference sets D_1..D_l with a common (mu, nu) and, for each ordered
    pair (i, j) of distinct 1-based indices, the witness set D(i, j) with
    D_i D_j^(-1) = (mu - nu) D(i, j) + nu G."""

    group: FiniteGroup
    records: tuple[DifferenceSetRecord, ...]
    munu: MuNu
    witnesses: dict[tuple[int, int], DifferenceSetRecord]

    @property
    def size(self) -> int:
        return len(self.records)

    @property
    def params(self) -> DSParams:
        return self.records[0].params

    def sets(self) -> list[tuple[int, ...]]:
        return [r.elements for r in self.records]


@dataclass(frozen=True)
class LinkingSystem:
    """A full system: difference sets D_(i,j) for 0 <= i != j <= l."""

    group: FiniteGroup
    entries: dict[tuple[int, int], DifferenceSetRecord]
    munu: MuNu

    @property
    def top_index(self) -> int:
        return max(i for i, _ in self.entries)


def _pair_witness(G: FiniteGroup, xi: rg.GroupRingElement, xj: rg.GroupRingElement,
                  munu: MuNu, params: DSParams):
    """Witness record for D_i D_j^(-1) under (mu, nu), or None."""
    prod = rg.mul(xi, rg.involution(xj))
    support = rg.decompose_two_valued(prod, munu.mu, munu.nu)
    if support is None:
        return None
    wparams = is_difference_set(G, support)
    if wparams != params:
        return None
    return DifferenceSetRecord(G, support, wparams)


def verify_reduced(G: FiniteGroup, sets) -> ReducedLinkingSystem | None:
    """Check Definition-level linking of a list of element sets.

    Every set must be a difference set with common parameters, and a single
    (mu, nu) branch must make every ordered pair decompose two-valuedly with
    a difference-set witness.  Returns the verified system or None.
    """
    if len(sets) < 2:
        return None
    records = []
    for S in sets:
        params = is_difference_set(G, S)
        if params is None:
            return None
        records.append(DifferenceSetRecord(G, tuple(S), params))
    params = records[0].params
    if any(r.params != params for r in records):
        return None
    ring = [r.ring_element() for r in records]
    for munu in mu_nu_candidates(params):
        witnesses: dict[tuple[int, int], DifferenceSetRecord] = {}
        ok = True
        for i in range(len(records)):
            for j in range(len(records)):
                if i == j:
                    continue
                w = _pair_witness(G, ring[i], ring[j], munu, params)
                if w is None:
                    ok = False
                    break
                witnesses[(i + 1, j + 1)] = w
            if not ok:
                break
        if ok:
            return ReducedLinkingSystem(G, tuple(records), munu, witnesses)
    return None


def expand(reduced: ReducedLinkingSystem) -> LinkingSystem:
    """Full system on indices 0..l: D_(i,0) = D_i, D_(0,i) = D_i^(-1), and
    D_(i,j) the stored witness for nonzero i != j."""
    G = reduced.group
    entries: dict[tuple[int, int], DifferenceSetRecord] = {}
    for i, rec in enumerate(reduced.records, start=1):
        entries[(i, 0)] = rec
        inv_set = tuple(G.inv(a) for a in rec.elements)
        entries[(0, i)] = DifferenceSetRecord(G, inv_set, rec.params)
    for (i, j), w in reduced.witnesses.items():
        entries[(i, j)] = w
    full = LinkingSystem(G, entries, reduced.munu)
    if not verify_full(full):
        raise ValueError("expanded system failed full verification")
    return full


def reduce_system(full: LinkingSystem) -> ReducedLinkingSystem:
    """Reduced system D_i = D_(i,0); recomputes and verifies witnesses."""
    if not verify_full(full):
        raise ValueError("input system failed full verification")
    ell = full.top_index
    sets = [full.entries[(i, 0)].elements for i in range(1, ell + 1)]
    reduced = verify_reduced(full.group, sets)
    if reduced is None:
        raise ValueError("reduction failed verification")
    return reduced


def verify_full(full: LinkingSystem) -> bool:
    """Exact check of the product identity over all index triples and the
    transpose-involution identity over all pairs."""
    G = full.group
    ell = full.top_index
    idx = range(ell + 1)
    expected = {(i, j) for i in idx for j in idx if i != j}
    if set(full.entries) != expected:
        raise ValueError("malformed system: wrong index set")
    params = next(iter(full.entries.values())).params
    mu, nu = full.munu.as_tuple()
    ring = {}
    for key, rec in full.entries.items():
        if rec.params != params or is_difference_set(G, rec.elements) != params:
            return False
        ring[key] = rec.ring_element()
    allg = rg.all_ones(G)
    for (i, j), rec in full.entries.items():
        inv_ji = rg.involution(ring[(j, i)])
        if ring[(i, j)] != inv_ji:
            return False
    for h in idx:
        for i in idx:
            for j in idx:
                if h == i or i == j or h == j:
                    continue
                lhs = rg.mul(ring[(h, i)], ring[(i, j)])
                rhs = rg.add(rg.scale(mu - nu, ring[(h, j)]), rg.scale(nu, allg))
                if lhs != rhs:
                    return False
    return True


def reversibility_profile(reduced: ReducedLinkingSystem) -> tuple[bool, ...]:
    return tuple(is_reversible(r) for r in reduced.records)


def is_reversible_system(reduced: ReducedLinkingSystem) -> bool:
    """True iff every difference set of the expanded full system is reversible."""
    full = expand(reduced)
    return all(is_reversible(rec) for rec in full.entries.values())


def complement_system(reduced: ReducedLinkingSystem) -> ReducedLinkingSystem:
    """Complement every set; (mu', nu') = (v - 2k + nu, v - 2k + mu)."""
    G = reduced.group
    comp_sets = [complement(r).elements for r in reduced.records]
    out = verify_reduced(G, comp_sets)
    if out is None:
        raise ValueError("complement system failed verification")
    v, k = reduced.params.v, reduced.params.k
    want = (v - 2 * k + reduced.munu.nu, v - 2 * k + reduced.munu.mu)
    if out.munu.as_tuple() != want:
        raise ValueError("complement system produced unexpected (mu, nu)")
    return out


def record_from_sets(G: FiniteGroup, sets) -> ReducedLinkingSystem:
    """verify_reduced that raises instead of returning None."""
    out = verify_reduced(G, sets)
    if out is None:
        raise ValueError("sets do not form a reduced linking system")
    return out
