"""Group difference matrices and the machine that turns a (G/E, m, 1)
difference matrix into a reduced linking system of difference sets.

The four drivers at the bottom (general / improved / tyken / nonreversible)
build the infinite families in abelian 2-groups, D4 x K, and Z_4^(d+1).
Difference matrices themselves come from a pipeline: Galois-ring
multiplication tables for homogeneous groups, products across invariant
factors, and a bounded backtracking search that closes the remaining gaps at
desk scale; the row-pair verifier is the sole arbiter.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .designs import HyperplaneFamily, hyperplanes, two_group_params
from .galois import GaloisRing
from .groups import (
    FiniteGroup,
    Subgroup,
    abelian_element,
    abelian_exponent_tuple,
    is_central,
    make_abelian,
    subgroup_generated,
)
from .linking import ReducedLinkingSystem, mu_nu_candidates, verify_reduced

DEFAULT_SEARCH_BUDGET = 10 ** 8


@dataclass(frozen=True)
class DifferenceMatrix:
    """An m x (lam*|G|) array of element ids whose row-pair quotients cover
    the group exactly lam times."""

    group: FiniteGroup
    lam: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        width = self.lam * self.group.order
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if any(len(row) != width for row in rows):
            raise ValueError(f"every row must have lam*|G| = {width} entries")
        object.__setattr__(self, "rows", rows)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64)


def verify_dm(M: DifferenceMatrix) -> bool:
    """Exact row-pair difference-multiset check."""
    G = M.group
    arr = M.array()
    inv = G.inv_table
    for i in range(M.num_rows):
        for r in range(M.num_rows):
            if i == r:
                continue
            diffs = G.table[arr[i], inv[arr[r]]]
            if not np.all(np.bincount(diffs, minlength=G.order) == M.lam):
                return False
    return True


def normalize(M: DifferenceMatrix) -> DifferenceMatrix:
    """Make row 0 and column 0 all-identity.

    Columns are right-multiplied by b_{0,j}^{-1}; rows are then
    left-multiplied by b_{i,0}^{-1} (left so the difference property is
    preserved in nonabelian groups too; for abelian groups this is the
    textbook normalization).
    """
    if not verify_dm(M):
        raise ValueError("cannot normalize an unverified difference matrix")
    G = M.group
    arr = M.array()
    arr = G.table[arr, np.broadcast_to(G.inv_table[arr[0]], arr.shape)]
    first = G.inv_table[arr[:, 0]]
    arr = G.table[first[:, None], arr]
    out = DifferenceMatrix(G, M.lam, tuple(tuple(int(x) for x in row) for row in arr))
    if not verify_dm(out):
        raise AssertionError("normalization broke the difference property")
    return out


# -- constructions -------------------------------------------------------------


def dm_galois_ring(e: int, t: int) -> DifferenceMatrix:
    """(Z_{2^e}^t, 2^t, 1)-difference matrix from GR(2^e, t).

    Rows are indexed by the Teichmueller representatives, columns by all
    ring elements; entry (i, j) is the ring product.  Differences of
    distinct Teichmueller elements are units, so every row pair covers the
    additive group exactly once.
    """
    ring = GaloisRing(e, t)
    G = make_abelian([2 ** e] * t)
    taus = ring.teichmueller()
    rows = []
    for tau in taus:
        row = [abelian_element(G, ring.decode(ring.mul(tau, z))) for z in range(ring.size)]
        rows.append(tuple(row))
    M = DifferenceMatrix(G, 1, tuple(rows))
    if not verify_dm(M):
        raise AssertionError("Galois-ring construction failed verification")
    return M


def dm_field_elementary(t: int) -> DifferenceMatrix:
    """(Z_2^t, 2^t, 1)-difference matrix b_{i,j} = a_i * a_j over GF(2^t)."""
    return dm_galois_ring(1, t)


def dm_product(M1: DifferenceMatrix, M2: DifferenceMatrix) -> DifferenceMatrix:
    """Componentwise composition over G1 x G2 with min(m1, m2) rows."""
    if M1.lam != 1 or M2.lam != 1:
        raise ValueError("product composition requires lambda = 1")
    from .groups import direct_product

    G = direct_product(M1.group, M2.group)
    v2 = M2.group.order
    m = min(M1.num_rows, M2.num_rows)
    rows = []
    for i in range(m):
        row = [M1.rows[i][j1] * v2 + M2.rows[i][j2]
               for j1 in range(M1.group.order) for j2 in range(v2)]
        rows.append(tuple(row))
    M = DifferenceMatrix(G, 1, tuple(rows))
    if not verify_dm(M):
        raise AssertionError("product composition failed verification")
    return M


def _factor_exponent(n: int) -> int:
    e = n.bit_length() - 1
    if 2 ** e != n:
        raise ValueError("group is not a 2-group")
    return e


def _transplant(M: DifferenceMatrix, G: FiniteGroup) -> DifferenceMatrix:
    """Reinterpret a matrix over an identically-encoded group object."""
    if M.group.cyclic_factors != G.cyclic_factors:
        raise ValueError("cyclic factor mismatch")
    return DifferenceMatrix(G, M.lam, M.rows)


def dm_auto(G: FiniteGroup, target_rows: int,
            budget: int = DEFAULT_SEARCH_BUDGET) -> DifferenceMatrix | None:
    """Best-effort (G, m, 1)-difference matrix with m >= target_rows.

    Pipeline: Galois-ring table when the group is homogeneous, product
    composition across invariant-factor chunks, then bounded backtracking.
    Returns None when the search exhausts (absence at desk scale) or the
    budget runs out.
    """
    if G.cyclic_factors is None:
        raise ValueError("dm_auto needs a group built from cyclic factors")
    if not G.abelian:
        raise ValueError("dm_auto handles abelian 2-groups only")
    factors = G.cyclic_factors
    for n in factors:
        _factor_exponent(n)
    v = G.order
    if target_rows > v:
        return None
    if target_rows <= 2:
        rows = (tuple([0] * v), tuple(range(v)))
        return DifferenceMatrix(G, 1, rows)

    if len(set(factors)) == 1:
        e = _factor_exponent(factors[0])
        M = _transplant(dm_galois_ring(e, len(factors)), G)
        if M.num_rows >= target_rows:
            return M

    sorted_factors = tuple(sorted(factors, reverse=True))
    chunks = _equal_chunks(sorted_factors)
    if len(chunks) > 1:
        parts = [dm_galois_ring(_factor_exponent(val), count) for val, count in chunks]
        M = parts[0]
        for part in parts[1:]:
            M = dm_product(M, part)
        if M.num_rows >= target_rows:
            return _permute_onto(M, G, sorted_factors)

    rows = _backtrack_dm(G, target_rows, budget)
    if rows is None:
        return None
    return DifferenceMatrix(G, 1, rows)


def _equal_chunks(sorted_factors: tuple[int, ...]) -> list[tuple[int, int]]:
    chunks: list[tuple[int, int]] = []
    for n in sorted_factors:
        if chunks and chunks[-1][0] == n:
            chunks[-1] = (n, chunks[-1][1] + 1)
        else:
            chunks.append((n, 1))
    return chunks


def _permute_onto(M: DifferenceMatrix, G: FiniteGroup,
                  sorted_factors: tuple[int, ...]) -> DifferenceMatrix:
    """Map a matrix over make_abelian(sorted_factors) onto G, which has the
    same multiset of factors in a possibly different order."""
    src = M.group
    if src.cyclic_factors != sorted_factors:
        raise AssertionError("unexpected source factor order")
    if G.cyclic_factors == sorted_factors:
        return _transplant(M, G)
    perm = _stable_factor_permutation(sorted_factors, G.cyclic_factors)
    idmap = np.empty(src.order, dtype=np.int64)
    for a in range(src.order):
        exps = abelian_exponent_tuple(src, a)
        dst_exps = [0] * len(exps)
        for i, p in enumerate(perm):
            dst_exps[p] = exps[i]
        idmap[a] = abelian_element(G, dst_exps)
    rows = tuple(tuple(int(idmap[x]) for x in row) for row in M.rows)
    out = DifferenceMatrix(G, 1, rows)
    if not verify_dm(out):
        raise AssertionError("factor permutation broke the difference property")
    return out


def _stable_factor_permutation(src: tuple[int, ...], dst: tuple[int, ...]) -> list[int]:
    """perm[i] = position in dst for the i-th src factor (equal values in order)."""
    slots: dict[int, list[int]] = {}
    for pos, n in enumerate(dst):
        slots.setdefault(n, []).append(pos)
    perm = []
    for n in src:
        if not slots.get(n):
            raise ValueError("factor multisets differ")
        perm.append(slots[n].pop(0))
    return perm


def _backtrack_dm(G: FiniteGroup, m: int, budget: int):
    """Column-lexicographic search for m rows, rows filled in order.

    Symmetry reduction: row 0 is the identity row, row 1 is the elements in
    id order (valid because columns of a difference matrix may be permuted
    freely), and column 0 is all-identity.  Returns the lexicographically
    first solution or None.
    """
    v = G.order
    table, inv = G.table, G.inv_table
    rows: list[list[int]] = [[0] * v, list(range(v))]
    nodes = [0]

    def extend() -> bool:
        if len(rows) == m:
            return True
        prior = [np.array(r, dtype=np.int64) for r in rows[1:]]
        used_val = np.zeros(v, dtype=bool)
        used_diff = [np.zeros(v, dtype=bool) for _ in prior]
        new_row = [0] * v
        used_val[0] = True
        for ud, pr in zip(used_diff, prior):
            ud[table[0, inv[pr[0]]]] = True

        def place(j: int) -> bool:
            if j == v:
                rows.append(list(new_row))
                if extend():
                    return True
                rows.pop()
                return False
            for val in range(v):
                if used_val[val]:
                    continue
                nodes[0] += 1
                if nodes[0] > budget:
                    raise _BudgetExhausted
                diffs = [int(table[val, inv[pr[j]]]) for pr in prior]
                if any(ud[d] for ud, d in zip(used_diff, diffs)):
                    continue
                used_val[val] = True
                for ud, d in zip(used_diff, diffs):
                    ud[d] = True
                new_row[j] = val
                if place(j + 1):
                    return True
                used_val[val] = False
                for ud, d in zip(used_diff, diffs):
                    ud[d] = False
            return False

        return place(1)

    if m <= 2:
        return tuple(tuple(r) for r in rows[:m])
    try:
        found = extend()
    except _BudgetExhausted:
        return None
    if not found:
        return None
    return tuple(tuple(r) for r in rows)


class _BudgetExhausted(Exception):
    pass


# -- difference matrix -> linking system ---------------------------------------


def _coset_ids(G: FiniteGroup, E: Subgroup) -> np.ndarray:
    """coset id per element; ids follow increasing minimal coset element."""
    out = np.full(G.order, -1, dtype=np.int64)
    next_id = 0
    for a in G.elements():
        if out[a] == -1:
            for h in E.elements:
                out[G.mul(a, h)] = next_id
            next_id += 1
    return out


def _infer_depth(G: FiniteGroup) -> int:
    r = G.order.bit_length() - 1
    if 2 ** r != G.order or r % 2 != 0 or r < 2:
        raise ValueError("group order must be 2^(2d+2)")
    return (r - 2) // 2


def _check_linking_subgroup(G: FiniteGroup, E: Subgroup, d: int) -> None:
    if E.group is not G:
        raise ValueError("subgroup belongs to a different group")
    if E.order != 2 ** (d + 1):
        raise ValueError(f"central subgroup must have order {2 ** (d + 1)}")
    if not is_central(G, E):
        raise ValueError("subgroup must be central")
    for a in E.elements:
        if a != 0 and G.mul(a, a) != 0:
            raise ValueError("central subgroup must be elementary abelian")


def default_hyperplanes(G: FiniteGroup, E: Subgroup) -> HyperplaneFamily:
    """Hyperplane family over the greedy minimal-id basis of E."""
    basis: list[int] = []
    span = {0}
    for a in E.elements:
        if a not in span:
            basis.append(a)
            span = {G.mul(x, y) for x in span for y in (0, a)}
    return hyperplanes(E, 2, tuple(basis))


def linked_from_dm(G: FiniteGroup, E: Subgroup, bmat, lifts=None,
                   family: HyperplaneFamily | None = None) -> ReducedLinkingSystem:
    """Difference sets D_i = sum_j b_{i,j} e_{i,j} H_j from matrix rows.

    ``bmat`` is an m x 2^(d+1) array of G element ids whose cosets modulo E
    form a (G/E, m, 1)-difference matrix with row 0 inside E (row multiples
    of a normalized matrix are accepted; the construction only needs row 0
    to project to the identity).  ``lifts`` is an (m-1) x s array over E,
    defaulting to all-identity.  Rows 1..m-1 and columns 1..s produce the
    system, which is re-verified before being returned.
    """
    d = _infer_depth(G)
    _check_linking_subgroup(G, E, d)
    s = 2 ** (d + 1) - 1
    bmat = [[int(x) for x in row] for row in bmat]
    m = len(bmat)
    if m < 3:
        raise ValueError("need at least 3 matrix rows (system size m-1 >= 2)")
    if any(len(row) != s + 1 for row in bmat):
        raise ValueError(f"matrix must have {s + 1} columns")
    coset = _coset_ids(G, E)
    if any(coset[x] != 0 for x in bmat[0]):
        raise ValueError("row 0 must project to the identity coset")
    _check_quotient_dm(G, coset, bmat, s + 1)
    if family is None:
        family = default_hyperplanes(G, E)
    if family.subgroup.elements != E.elements:
        raise ValueError("hyperplane family does not belong to E")
    if lifts is None:
        lifts = [[0] * s for _ in range(m - 1)]
    lifts = [[int(x) for x in row] for row in lifts]
    if len(lifts) != m - 1 or any(len(row) != s for row in lifts):
        raise ValueError(f"lift choice must be {(m - 1)} x {s}")
    eset = set(E.elements)
    if any(x not in eset for row in lifts for x in row):
        raise ValueError("lift entries must lie in E")

    sets = []
    for i in range(1, m):
        elems: list[int] = []
        for j in range(1, s + 1):
            g = G.mul(bmat[i][j], lifts[i - 1][j - 1])
            H = family.members[j - 1]
            elems.extend(G.mul(g, h) for h in H.elements)
        sets.append(tuple(sorted(elems)))
    system = verify_reduced(G, sets)
    if system is None:
        raise AssertionError("difference-matrix construction failed verification")
    expect = mu_nu_candidates(two_group_params(2 * d + 2))
    if system.munu not in expect:
        raise AssertionError("verified system has unexpected (mu, nu)")
    return system


def _check_quotient_dm(G: FiniteGroup, coset: np.ndarray, bmat, width: int) -> None:
    inv = G.inv_table
    arr = np.array(bmat, dtype=np.int64)
    for i in range(len(bmat)):
        for r in range(len(bmat)):
            if i == r:
                continue
            diffs = coset[G.table[arr[i], inv[arr[r]]]]
            if not np.all(np.bincount(diffs, minlength=width) == 1):
                raise ValueError("matrix does not project to a (G/E, m, 1)-difference matrix")


def witness_direct(G: FiniteGroup, family: HyperplaneFamily, f_reps, g_reps,
                   check: bool = True) -> tuple[int, ...]:
    """The witness D = sum_i f_i g_i^(-1) (E - H_i) of the direct formula.

    With ``check`` on (the default), {f_i}, {g_i}, {f_i g_i^(-1)} must each
    occupy s distinct cosets of E and the implied index-0 cosets must close
    up, so all three extend to full transversals; outside those conditions
    the formula's output is not a linking witness (pass check=False to
    evaluate it anyway, e.g. at f = g where the product has identity
    coefficient k rather than a two-valued shape).
    """
    E = family.subgroup
    s = family.count
    f = [int(x) for x in f_reps]
    g = [int(x) for x in g_reps]
    if len(f) != s or len(g) != s:
        raise ValueError(f"expected {s} representatives per side")
    coset = _coset_ids(G, E)
    prods = [G.mul(f[i], G.inv(g[i])) for i in range(s)]
    if check:
        missing = []
        for seq in (f, g, prods):
            ids = [int(coset[x]) for x in seq]
            if len(set(ids)) != s:
                raise ValueError("representatives do not occupy distinct cosets")
            missing.append((set(range(s + 1)) - set(ids)).pop())
        f0 = int(np.nonzero(coset == missing[0])[0][0])
        g0 = int(np.nonzero(coset == missing[1])[0][0])
        if int(coset[G.mul(f0, G.inv(g0))]) != missing[2]:
            raise ValueError("transversal condition violated at the omitted coset")
    elems: list[int] = []
    hset = [set(H.elements) for H in family.members]
    for i in range(s):
        rest = [h for h in E.elements if h not in hset[i]]
        elems.extend(G.mul(prods[i], h) for h in rest)
    return tuple(sorted(elems))


# -- family drivers --------------------------------------------------------------


def _sorted_positions(factors: tuple[int, ...]) -> list[int]:
    return sorted(range(len(factors)), key=lambda i: (-factors[i], i))


def _abelian_2group_data(G: FiniteGroup):
    if not G.abelian or G.cyclic_factors is None:
        raise ValueError("driver needs an abelian group built from cyclic factors")
    d = _infer_depth(G)
    factors = G.cyclic_factors
    for n in factors:
        _factor_exponent(n)
    return d, factors


def _build_from_quotient_dm(G: FiniteGroup, d: int, head_positions: list[int],
                            tail_positions: list[int], m: int,
                            reverse_basis: bool = False,
                            budget: int = DEFAULT_SEARCH_BUDGET) -> ReducedLinkingSystem:
    """Shared driver: E from head factor involutions, quotient-isomorphic
    abelian model for G/E, dm_auto, section back into G, linked_from_dm."""
    factors = G.cyclic_factors
    assert factors is not None
    e_gens = [_generator_power(G, p, factors[p] // 2) for p in head_positions]
    E = subgroup_generated(G, e_gens)
    if E.order != 2 ** (d + 1):
        raise AssertionError("central subgroup has wrong order")

    q_factors: list[int] = []
    q_positions: list[int] = []
    for p in head_positions:
        if factors[p] // 2 >= 2:
            q_factors.append(factors[p] // 2)
            q_positions.append(p)
    for p in tail_positions:
        q_factors.append(factors[p])
        q_positions.append(p)
    order = sorted(range(len(q_factors)), key=lambda i: (-q_factors[i], i))
    q_factors = [q_factors[i] for i in order]
    q_positions = [q_positions[i] for i in order]

    if not q_factors:
        raise ValueError("degenerate quotient G/E")
    Q = make_abelian(q_factors)
    M = dm_auto(Q, m, budget=budget)
    if M is None:
        raise AssertionError("difference-matrix pipeline came up short")

    section = _section_map(G, Q, q_positions)
    bmat = [[int(section[x]) for x in row] for row in M.rows[:m]]
    basis = list(e_gens)
    if reverse_basis:
        basis.reverse()
    family = hyperplanes(E, 2, tuple(basis))
    return linked_from_dm(G, E, bmat, family=family)


def _generator_power(G: FiniteGroup, position: int, power: int) -> int:
    exps = [0] * len(G.cyclic_factors)
    exps[position] = power
    return abelian_element(G, exps)


def _section_map(G: FiniteGroup, Q: FiniteGroup, q_positions: list[int]) -> np.ndarray:
    """Canonical lift Q -> G: copy each quotient exponent onto its factor."""
    out = np.empty(Q.order, dtype=np.int64)
    for q in range(Q.order):
        q_exps = abelian_exponent_tuple(Q, q)
        g_exps = [0] * len(G.cyclic_factors)
        for exp, p in zip(q_exps, q_positions):
            g_exps[p] = exp
        out[q] = abelian_element(G, g_exps)
    return out


def build_general(G: FiniteGroup, budget: int = DEFAULT_SEARCH_BUDGET) -> ReducedLinkingSystem:
    """Size-3 system in an abelian group of order 2^(2d+2), rank >= d+1,
    exponent <= 2^(d+1), via a 4-row quotient difference matrix."""
    from .groups import abelian_rank, exponent

    d, factors = _abelian_2group_data(G)
    if abelian_rank(G) < d + 1:
        raise ValueError(f"rank must be at least {d + 1}")
    if exponent(G) > 2 ** (d + 1):
        raise ValueError(f"exponent must be at most {2 ** (d + 1)}")
    pos = _sorted_positions(factors)
    return _build_from_quotient_dm(G, d, pos[:d + 1], pos[d + 1:], m=4, budget=budget)


def build_improved(G: FiniteGroup, budget: int = DEFAULT_SEARCH_BUDGET) -> ReducedLinkingSystem:
    """Size 2^floor((d+1)/(e-1)) - 1 system for exponent 2^e with
    2 <= e <= (d+3)/2, via a larger quotient difference matrix."""
    from .groups import abelian_rank, exponent

    d, factors = _abelian_2group_data(G)
    if abelian_rank(G) < d + 1:
        raise ValueError(f"rank must be at least {d + 1}")
    e = _factor_exponent(exponent(G))
    if not 2 <= e <= (d + 3) / 2:
        raise ValueError("exponent 2^e must satisfy 2 <= e <= (d+3)/2")
    m = 2 ** ((d + 1) // (e - 1))
    pos = _sorted_positions(factors)
    return _build_from_quotient_dm(G, d, pos[:d + 1], pos[d + 1:], m=m, budget=budget)


def build_tyken(d: int, K: FiniteGroup) -> ReducedLinkingSystem:
    """Size 2^(d+1)-1 system in D4 x K for abelian K of order 2^(2d-1) and
    exponent at most 4."""
    from .groups import direct_product, exponent, make_dihedral8

    if d < 1:
        raise ValueError("d must be a positive integer")
    if not K.abelian or K.cyclic_factors is None:
        raise ValueError("K must be an abelian group built from cyclic factors")
    if K.order != 2 ** (2 * d - 1):
        raise ValueError(f"K must have order {2 ** (2 * d - 1)}")
    if exponent(K) > 4:
        raise ValueError("K must have exponent at most 4")
    D4 = make_dihedral8()
    G = direct_product(D4, K)
    vK = K.order

    kfactors = K.cyclic_factors
    four_pos = [i for i, n in enumerate(kfactors) if n == 4]
    two_pos = [i for i, n in enumerate(kfactors) if n == 2]
    c, r = len(four_pos), len(kfactors)
    # E' = <squares of Z4 factors, first d-c of the Z2 factors>: K/E' = Z2^(d-1)
    eprime = [abelian_element(K, _unit_exps(kfactors, p, 2)) for p in four_pos]
    eprime += [abelian_element(K, _unit_exps(kfactors, p, 1)) for p in two_pos[:d - c]]
    a_sq = D4.element("a^2")
    e_gens = [a_sq * vK + 0] + [0 * vK + k for k in eprime]
    E = subgroup_generated(G, e_gens)

    # section Z2^(d+1) -> G: two bits for D4/<a^2>, the rest for K/E'
    Q = make_abelian([2] * (d + 1))
    quot_gens_K = [abelian_element(K, _unit_exps(kfactors, p, 1)) for p in four_pos]
    quot_gens_K += [abelian_element(K, _unit_exps(kfactors, p, 1)) for p in two_pos[d - c:]]
    a_id, b_id = D4.element("a"), D4.element("b")
    section = np.empty(Q.order, dtype=np.int64)
    for q in range(Q.order):
        bits = abelian_exponent_tuple(Q, q)
        d4_part = D4.mul(D4.power(a_id, bits[0]), D4.power(b_id, bits[1]))
        k_part = 0
        for bit, gen in zip(bits[2:], quot_gens_K):
            k_part = K.mul(k_part, K.power(gen, bit))
        section[q] = d4_part * vK + k_part
    M = dm_auto(Q, 2 ** (d + 1))
    if M is None:
        raise AssertionError("field matrix pipeline failed")
    bmat = [[int(section[x]) for x in row] for row in M.rows]
    family = hyperplanes(E, 2, tuple(e_gens))
    return linked_from_dm(G, E, bmat, family=family)


def _unit_exps(factors, position: int, value: int) -> list[int]:
    exps = [0] * len(factors)
    exps[position] = value
    return exps


def build_nonreversible(d: int) -> ReducedLinkingSystem:
    """Size 2^(d+1)-1 system in Z_4^(d+1) whose first set is not reversible.

    The hyperplane labelled H_1 omits x_1^2, the matrix entry b_{1,1} lifts
    to x_1, and the lift e_{1,1} is the identity, so D_1 contains x_1 but
    not x_1^3.
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    G = make_abelian([4] * (d + 1))
    positions = list(range(d + 1))
    system = _build_from_quotient_dm(G, d, positions, [], m=2 ** (d + 1),
                                     reverse_basis=True)
    from .designs import is_reversible

    if is_reversible(system.records[0]):
        raise AssertionError("first difference set is unexpectedly reversible")
    return system
