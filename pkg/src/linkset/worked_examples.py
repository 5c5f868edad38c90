"""Hand-checkable worked examples used by the selftest, the test suite, and
the demo scripts.

The centerpiece is a classical reduced (16,6,2,4;3)-linking system in
Z_4 x Z_4 together with the difference-matrix data that reproduces it, and
an order-16 worked example over Z_4 x Z_2 x Z_2.
"""

from __future__ import annotations

from .designs import hyperplanes
from .diffmat import DifferenceMatrix
from .groups import FiniteGroup, make_abelian, subgroup_generated


def _ids(G: FiniteGroup, words: list[str]) -> tuple[int, ...]:
    return tuple(sorted(G.element(w) for w in words))


def _matrix_ids(G: FiniteGroup, rows: list[list[str]]) -> list[list[int]]:
    return [[G.element(w) for w in row] for row in rows]


# -- the linked triple in Z4 x Z4 ------------------------------------------------

LINKED_TRIPLE_WORDS = [
    ["x1", "x1^3*x2", "x2^3", "x1^3", "x1*x2^3", "x2"],
    ["x1", "x1^3*x2", "x2^3", "x1*x2^2", "x1*x2", "x1^2*x2"],
    ["x1", "x1^3*x2", "x2^3", "x1^2*x2^3", "x1^3*x2^3", "x1^3*x2^2"],
]

# witness for the ordered pair (2, 1): D_2 D_1^(-1) = -2 D + 3 G
WITNESS_21_WORDS = ["x2^3", "x1", "x1^2*x2^3", "x1^3*x2", "x1^3*x2^2", "x1^3*x2^3"]


def linked_triple_z4z4():
    G = make_abelian([4, 4])
    return G, [_ids(G, words) for words in LINKED_TRIPLE_WORDS]


def witness_21_z4z4(G: FiniteGroup) -> tuple[int, ...]:
    return _ids(G, WITNESS_21_WORDS)


# difference-matrix data reproducing the triple: D_i = sum_j b_ij e_ij H_j
# over E = <x1^2, x2^2> with H_1 = <x1^2>, H_2 = <x2^2>, H_3 = <x1^2*x2^2>
TRIPLE_B_WORDS = [
    ["1", "1", "1", "1"],
    ["1", "x1", "x2", "x1*x2"],
    ["1", "x1*x2", "x1", "x2"],
    ["1", "x2", "x1*x2", "x1"],
]
TRIPLE_E_WORDS = [
    ["1", "1", "x2^2"],
    ["1", "1", "x2^2"],
    ["x2^2", "x1^2", "1"],
]


def triple_dm_data(G: FiniteGroup):
    E = subgroup_generated(G, [G.element("x1^2"), G.element("x2^2")])
    family = hyperplanes(E, 2, (G.element("x1^2"), G.element("x2^2")))
    bmat = _matrix_ids(G, TRIPLE_B_WORDS)
    emat = _matrix_ids(G, TRIPLE_E_WORDS)
    return E, family, bmat, emat


# the two base matrices whose row multiples and lift choices generate every
# maximum-size reduced linking system in Z4 x Z4
CENSUS_B1_WORDS = [
    ["1", "1", "1", "1"],
    ["1", "x1", "x2", "x1*x2"],
    ["1", "x2", "x1*x2", "x1"],
    ["1", "x1*x2", "x1", "x2"],
]
CENSUS_B2_WORDS = [
    ["1", "1", "1", "1"],
    ["1", "x1", "x1*x2", "x2"],
    ["1", "x2", "x1", "x1*x2"],
    ["1", "x1*x2", "x2", "x1"],
]

# steering reversibility: with the first matrix below no member of the
# resulting system is reversible (for any lift choice); with the second all
# three members are reversible
NONE_REVERSIBLE_B_WORDS = CENSUS_B2_WORDS
ALL_REVERSIBLE_B_WORDS = [
    ["1", "1", "1", "1"],
    ["x1", "1", "x2", "x1*x2"],
    ["x2", "x1", "1", "x1*x2"],
    ["x1*x2", "x1", "x2", "1"],
]


def census_b_matrices(G: FiniteGroup):
    return _matrix_ids(G, CENSUS_B1_WORDS), _matrix_ids(G, CENSUS_B2_WORDS)


def construction_side_systems(G: FiniteGroup) -> set[frozenset[frozenset[int]]]:
    """All 2^16 maximum-size systems in Z4 x Z4 built from the two base
    matrices, the 4^3 row multiples, and the 2^9 effective lift choices."""
    import itertools

    E = subgroup_generated(G, [G.element("x1^2"), G.element("x2^2")])
    family = hyperplanes(E, 2, (G.element("x1^2"), G.element("x2^2")))
    lift_options = []
    for H in family.members:
        outside = next(h for h in E.elements if h not in set(H.elements))
        lift_options.append((0, outside))
    coset_reps = [G.element(w) for w in ("1", "x1", "x2", "x1*x2")]

    out: set[frozenset[frozenset[int]]] = set()
    for bmat in census_b_matrices(G):
        for row_mults in itertools.product(coset_reps, repeat=3):
            for flat in itertools.product(*(lift_options[j % 3] for j in range(9))):
                lifts = (flat[0:3], flat[3:6], flat[6:9])
                members = []
                for i in range(1, 4):
                    parts: set[int] = set()
                    for j in range(1, 4):
                        g = G.mul(G.mul(bmat[i][j], row_mults[i - 1]), lifts[i - 1][j - 1])
                        parts |= {G.mul(g, h) for h in family.members[j - 1].elements}
                    members.append(frozenset(parts))
                out.add(frozenset(members))
    return out


# -- a (Z2^2, 4, 1)-difference matrix --------------------------------------------

DM_Z2Z2_WORDS = [
    ["1", "1", "1", "1"],
    ["1", "x1", "x2", "x1*x2"],
    ["1", "x2", "x1*x2", "x1"],
    ["1", "x1*x2", "x1", "x2"],
]


def dm_z2z2() -> DifferenceMatrix:
    G = make_abelian([2, 2])
    return DifferenceMatrix(G, 1, tuple(tuple(row) for row in _matrix_ids(G, DM_Z2Z2_WORDS)))


# -- the order-16 worked example over Z4 x Z2 x Z2 -------------------------------

ORDER16_B_WORDS = [
    ["1", "1", "1", "1"],
    ["1", "x1", "x2", "x1*x2"],
    ["1", "x2", "x1*x2", "x1"],
    ["1", "x1*x2", "x1", "x2"],
]
ORDER16_E_WORDS = [
    ["1", "1", "1"],
    ["x3", "x1^2", "x1^2"],
    ["x3", "1", "1"],
]
ORDER16_EXPECTED_SETS = [
    ["x1", "x1^3", "x2", "x2*x3", "x1*x2", "x1^3*x2*x3"],
    ["x2*x3", "x1^2*x2*x3", "x1^3*x2", "x1^3*x2*x3", "x1^3", "x1*x3"],
    ["x1*x2*x3", "x1^3*x2*x3", "x1", "x1*x3", "x2", "x1^2*x2*x3"],
]
ORDER16_WITNESS_23 = ["x1*x3", "x1^3*x3", "x2", "x2*x3", "x1*x2", "x1^3*x2*x3"]


def order16_worked_example():
    """Group, central subgroup, hyperplane family, matrices, expected sets."""
    G = make_abelian([4, 2, 2])
    E = subgroup_generated(G, [G.element("x1^2"), G.element("x3")])
    family = hyperplanes(E, 2, (G.element("x1^2"), G.element("x3")))
    bmat = _matrix_ids(G, ORDER16_B_WORDS)
    emat = _matrix_ids(G, ORDER16_E_WORDS)
    expected = [_ids(G, words) for words in ORDER16_EXPECTED_SETS]
    witness23 = _ids(G, ORDER16_WITNESS_23)
    return G, E, family, bmat, emat, expected, witness23
