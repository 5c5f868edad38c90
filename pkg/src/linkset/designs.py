"""Difference-set verification, parameter arithmetic, and the classical
hyperplane-based constructions (McFarland/Dillon and Spence).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import group_ring as rg
from .groups import FiniteGroup, Subgroup, is_central


@dataclass(frozen=True)
class DSParams:
    v: int
    k: int
    lam: int
    n: int

    def __post_init__(self):
        if self.n != self.k - self.lam:
            raise ValueError("n must equal k - lambda")
        if self.k * (self.k - 1) != self.lam * (self.v - 1):
            raise ValueError("counting relation k(k-1) = lambda(v-1) violated")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.n)


@dataclass(frozen=True)
class DifferenceSetRecord:
    group: FiniteGroup
    elements: tuple[int, ...]
    params: DSParams

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))

    def ring_element(self) -> rg.GroupRingElement:
        return rg.from_subset(self.group, self.elements)

    def names(self) -> list[str]:
        return [self.group.name(a) for a in self.elements]


def is_difference_set(G: FiniteGroup, S):
    """DSParams of S if S S^(-1) = n*1 + lambda*G in Z[G], else None."""
    s = rg.from_subset(G, S)
    prod = rg.mul(s, rg.involution(s)).coeffs
    k = int(s.coeffs.sum())
    if prod[0] != k:
        return None
    rest = prod[1:]
    if G.order > 1:
        lam = int(rest[0])
        if not np.all(rest == lam):
            return None
    else:
        lam = 0
    return DSParams(G.order, k, lam, k - lam)


def make_record(G: FiniteGroup, S) -> DifferenceSetRecord:
    params = is_difference_set(G, S)
    if params is None:
        raise ValueError("set is not a difference set")
    return DifferenceSetRecord(G, tuple(S), params)


def complement(record: DifferenceSetRecord) -> DifferenceSetRecord:
    G = record.group
    comp = tuple(a for a in G.elements() if a not in set(record.elements))
    v, k, lam, n = record.params.as_tuple()
    return DifferenceSetRecord(G, comp, DSParams(v, v - k, v - 2 * k + lam, n))


def is_reversible(record: DifferenceSetRecord) -> bool:
    """True iff the set is inverse-closed (D = D^(-1))."""
    G = record.group
    eset = set(record.elements)
    return all(G.inv(a) in eset for a in record.elements)


def two_group_params(r: int) -> DSParams:
    """Parameters forced on any nontrivial difference set in a group of order 2^r."""
    if r % 2 != 0 or r < 2:
        raise ValueError(f"no valid difference-set parameters in order 2^{r}")
    d = (r - 2) // 2
    return DSParams(2 ** (2 * d + 2), 2 ** d * (2 ** (d + 1) - 1),
                    2 ** d * (2 ** d - 1), 2 ** (2 * d))


def kraemer_exists(G: FiniteGroup) -> bool:
    """Kraemer's criterion: an abelian group of order 2^(2d+2) contains a
    difference set iff its exponent is at most 2^(d+2)."""
    from .groups import exponent

    if not G.abelian:
        raise ValueError("criterion applies to abelian groups")
    v = G.order
    r = v.bit_length() - 1
    if 2 ** r != v or r % 2 != 0 or r < 2:
        raise ValueError("group order must be 2^(2d+2) with d >= 0")
    d = (r - 2) // 2
    return exponent(G) <= 2 ** (d + 2)


@dataclass(frozen=True)
class HyperplaneFamily:
    """The index-p subgroups of an elementary abelian p-group E.

    Members are enumerated as kernels of the nonzero linear functionals on E
    (normalized so the first nonzero coefficient is 1), in lexicographic
    order of the coefficient vectors; this fixes the labels H_1..H_s.
    """

    subgroup: Subgroup
    prime: int
    basis: tuple[int, ...]
    members: tuple[Subgroup, ...]

    @property
    def count(self) -> int:
        return len(self.members)


def hyperplanes(E: Subgroup, p: int, basis) -> HyperplaneFamily:
    G = E.group
    basis = tuple(int(b) for b in basis)
    d1 = len(basis)
    if p ** d1 != E.order:
        raise ValueError("basis size does not match the subgroup order")
    for a in E.elements:
        if a != 0 and G.element_order(a) != p:
            raise ValueError("subgroup is not elementary abelian of exponent p")
    coords = _coordinates(G, E, basis, p)
    members = []
    for func in _normalized_functionals(d1, p):
        kernel = tuple(sorted(a for a in E.elements
                              if sum(f * c for f, c in zip(func, coords[a])) % p == 0))
        members.append(Subgroup(G, kernel))
    if len({m.elements for m in members}) != len(members):
        raise ValueError("hyperplane enumeration produced duplicates")
    return HyperplaneFamily(E, p, basis, tuple(members))


def _coordinates(G: FiniteGroup, E: Subgroup, basis, p: int) -> dict[int, tuple[int, ...]]:
    coords = {}
    for vec in itertools.product(range(p), repeat=len(basis)):
        a = 0
        for b, e in zip(basis, vec):
            a = G.mul(a, G.power(b, e))
        if a in coords:
            raise ValueError("basis does not span the subgroup freely")
        coords[a] = vec
    if set(coords) != set(E.elements):
        raise ValueError("basis span does not equal the subgroup")
    return coords


def _normalized_functionals(t: int, p: int):
    out = []
    for vec in itertools.product(range(p), repeat=t):
        nz = next((x for x in vec if x != 0), None)
        if nz == 1:
            out.append(vec)
    return out


def _check_central_elementary(G: FiniteGroup, E: Subgroup, p: int, d: int) -> None:
    if E.group is not G:
        raise ValueError("subgroup belongs to a different group")
    if not is_central(G, E):
        raise ValueError("subgroup must be central")
    if E.order != p ** (d + 1):
        raise ValueError(f"subgroup must have order {p ** (d + 1)}")


def mcfarland_construct(G: FiniteGroup, family: HyperplaneFamily,
                        transversal_reps, assignment) -> DifferenceSetRecord:
    """Union of cosets g_{assignment[i]} H_i over the s hyperplane slots.

    ``transversal_reps`` lists one representative per coset of E (s+1 of
    them); ``assignment`` maps slot i (0-based over the s hyperplanes) to an
    index into that list, injectively, leaving exactly one coset unused.
    """
    E = family.subgroup
    p = family.prime
    s = family.count
    d = _ilog(E.order, p) - 1
    _check_central_elementary(G, E, p, d)
    if G.order != E.order * (s + 1):
        raise ValueError("subgroup index must be s + 1")
    reps = [int(r) for r in transversal_reps]
    if len(reps) != s + 1:
        raise ValueError(f"expected {s + 1} coset representatives, got {len(reps)}")
    _check_transversal(G, E, reps)
    assignment = [int(a) for a in assignment]
    if len(assignment) != s or len(set(assignment)) != s or not all(0 <= a <= s for a in assignment):
        raise ValueError("assignment must injectively map the s slots into the s+1 cosets")
    elems: list[int] = []
    for i, H in enumerate(family.members):
        g = reps[assignment[i]]
        elems.extend(G.mul(g, h) for h in H.elements)
    record = make_record(G, elems)
    q = p
    expect = DSParams(q ** (d + 1) * (s + 1), q ** d * s,
                      q ** d * (s - q ** d), q ** (2 * d))
    if record.params != expect:
        raise ValueError("constructed set does not have McFarland parameters")
    return record


def spence_construct(G: FiniteGroup, family: HyperplaneFamily,
                     transversal_reps, complemented_slot: int) -> DifferenceSetRecord:
    """Coset of E minus H_m at one slot plus cosets of the other hyperplanes."""
    E = family.subgroup
    if family.prime != 3:
        raise ValueError("the Spence construction works over GF(3)")
    s = family.count
    d = _ilog(E.order, 3) - 1
    _check_central_elementary(G, E, 3, d)
    if G.order != E.order * s:
        raise ValueError("subgroup index must be s")
    reps = [int(r) for r in transversal_reps]
    if len(reps) != s:
        raise ValueError(f"expected {s} coset representatives, got {len(reps)}")
    _check_transversal(G, E, reps)
    m = int(complemented_slot)
    if not 0 <= m < s:
        raise ValueError("complemented slot out of range")
    elems: list[int] = []
    for i, H in enumerate(family.members):
        g = reps[i]
        if i == m:
            part = [h for h in E.elements if h not in set(H.elements)]
        else:
            part = list(H.elements)
        elems.extend(G.mul(g, h) for h in part)
    record = make_record(G, elems)
    expect = DSParams(3 ** (d + 1) * s, 3 ** d * (s + 1),
                      3 ** d * (s + 1 - 3 ** d), 3 ** (2 * d))
    if record.params != expect:
        raise ValueError("constructed set does not have Spence parameters")
    return record


def _check_transversal(G: FiniteGroup, E: Subgroup, reps) -> None:
    seen: set[int] = set()
    for r in reps:
        coset = frozenset(G.mul(r, h) for h in E.elements)
        if seen & coset:
            raise ValueError("representatives do not lie in distinct cosets")
        seen |= coset
    if len(seen) != len(reps) * E.order:
        raise ValueError("coset representatives overlap")


def _ilog(n: int, p: int) -> int:
    e = 0
    while n > 1:
        n //= p
        e += 1
    return e
