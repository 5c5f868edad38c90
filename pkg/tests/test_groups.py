import numpy as np
import pytest

from linkset.groups import (
    CosetTransversal,
    Subgroup,
    abelian_invariants,
    abelian_rank,
    center,
    coset_transversal,
    direct_product,
    exponent,
    find_central_elementary_abelian,
    group_from_spec,
    is_central,
    make_abelian,
    make_dihedral8,
    make_quaternion8,
    quotient,
    subgroup_generated,
)

SMALL_GROUPS = [
    make_abelian([4, 4]),
    make_abelian([8, 2]),
    make_abelian([3, 3, 5]),
    make_dihedral8(),
    make_quaternion8(),
    direct_product(make_dihedral8(), make_abelian([2])),
]


def test_make_abelian_orders():
    assert make_abelian([4, 4]).order == 16
    G = make_abelian([2, 2])
    assert sum(1 for a in G.elements() if G.element_order(a) == 2) == 3
    G = make_abelian([8, 2])
    assert G.order == 16 and exponent(G) == 8


def test_make_abelian_trivial():
    T = make_abelian([])
    assert T.order == 1 and T.names == ["1"]


def test_make_abelian_bad_factor():
    with pytest.raises(ValueError):
        make_abelian([4, 1])


def test_dihedral_structure():
    D4 = make_dihedral8()
    Z = center(D4)
    assert Z.elements == (0, D4.element("a^2"))
    assert sum(1 for a in D4.elements() if D4.element_order(a) == 4) == 2
    assert not D4.abelian
    # defining relations
    a, b = D4.element("a"), D4.element("b")
    assert D4.power(a, 4) == 0 and D4.power(b, 2) == 0
    assert D4.mul(D4.mul(b, a), D4.inv(b)) == D4.inv(a)


def test_quaternion_structure():
    Q8 = make_quaternion8()
    assert sum(1 for a in Q8.elements() if Q8.element_order(a) == 2) == 1
    a, b = Q8.element("a"), Q8.element("b")
    assert Q8.mul(b, b) == Q8.mul(a, a)
    assert Q8.mul(Q8.mul(b, a), Q8.inv(b)) == Q8.inv(a)


def test_direct_product():
    D4 = make_dihedral8()
    G = direct_product(D4, make_abelian([2]))
    assert G.order == 16 and not G.abelian
    H = direct_product(make_abelian([4]), make_abelian([2, 2]))
    assert H.order == 16 and H.abelian and exponent(H) == 4
    T = make_abelian([])
    P = direct_product(T, make_abelian([4, 4]))
    base = make_abelian([4, 4])
    assert P.order == base.order
    assert sorted(P.element_order(x) for x in P.elements()) == \
        sorted(base.element_order(x) for x in base.elements())


def test_inverse_antihomomorphism():
    for G in SMALL_GROUPS:
        for g in G.elements():
            for h in G.elements():
                assert G.inv(G.mul(g, h)) == G.mul(G.inv(h), G.inv(g))


def test_center_exponent_rank():
    assert exponent(make_abelian([4, 2, 2, 2, 2])) == 4
    G = direct_product(make_dihedral8(), make_abelian([2, 2]))
    assert center(G).order == 8
    assert abelian_rank(make_abelian([4, 4, 2, 2])) == 4
    with pytest.raises(ValueError):
        abelian_rank(make_dihedral8())


def test_abelian_invariants():
    assert abelian_invariants(make_abelian([4, 2, 2])) == (4, 2, 2)
    assert abelian_invariants(make_abelian([2, 4, 2])) == (4, 2, 2)
    G = make_abelian([4, 4])
    Q, _ = quotient(G, subgroup_generated(G, []))
    # quotient by the trivial subgroup: an isomorphic copy
    assert abelian_invariants(Q) == (4, 4)


def test_subgroup_generated_and_central():
    G = make_abelian([4, 4])
    E = subgroup_generated(G, [G.element("x1^2"), G.element("x2^2")])
    assert E.order == 4
    D4 = make_dihedral8()
    assert is_central(D4, subgroup_generated(D4, [D4.element("a^2")]))
    assert not is_central(D4, subgroup_generated(D4, [D4.element("a")]))


def test_subgroup_validation():
    G = make_abelian([4, 4])
    with pytest.raises(ValueError):
        Subgroup(G, (0, G.element("x1")))  # not closed
    with pytest.raises(ValueError):
        Subgroup(G, (G.element("x1^2"),))  # no identity


def test_quotients():
    D4 = make_dihedral8()
    Q, proj = quotient(D4, subgroup_generated(D4, [D4.element("a^2")]))
    assert Q.order == 4 and exponent(Q) == 2  # Klein four-group
    G = make_abelian([4, 4])
    Q2, _ = quotient(G, subgroup_generated(G, [G.element("x1^2"), G.element("x2^2")]))
    assert Q2.order == 4 and exponent(Q2) == 2
    Q3, _ = quotient(G, Subgroup(G, tuple(G.elements())))
    assert Q3.order == 1
    with pytest.raises(ValueError):
        quotient(D4, subgroup_generated(D4, [D4.element("b")]))  # not normal


def test_projection_is_homomorphism():
    cases = [
        (make_abelian([8, 2]), ["x1^4", "x2"]),
        (make_abelian([4, 4]), ["x1^2", "x2^2"]),
        (direct_product(make_dihedral8(), make_abelian([2])), ["a^2", "x1"]),
    ]
    for G, gen_words in cases:
        N = subgroup_generated(G, [G.element(w) for w in gen_words])
        Q, proj = quotient(G, N)
        for g in G.elements():
            for h in G.elements():
                assert proj[G.mul(g, h)] == Q.mul(proj[g], proj[h])


def test_coset_transversal():
    G = make_abelian([4, 4])
    E = subgroup_generated(G, [G.element("x1^2"), G.element("x2^2")])
    trans = coset_transversal(G, E)
    assert len(trans.reps) == 4 and trans.reps[0] == 0
    full = coset_transversal(G, Subgroup(G, tuple(G.elements())))
    assert full.reps == (0,)
    G45 = make_abelian([3, 3, 5])
    E9 = subgroup_generated(G45, [G45.element("x1"), G45.element("x2")])
    assert len(coset_transversal(G45, E9).reps) == 5
    # partition property
    covered = set()
    t = coset_transversal(G45, E9)
    for r in t.reps:
        coset = {G45.mul(r, h) for h in E9.elements}
        assert not (covered & coset)
        covered |= coset
    assert len(covered) == G45.order


def test_transversal_validation():
    G = make_abelian([4, 4])
    E = subgroup_generated(G, [G.element("x1^2"), G.element("x2^2")])
    with pytest.raises(ValueError):
        CosetTransversal(E, (0, G.element("x1^2")))  # overlapping cosets


def test_find_central_elementary_abelian():
    G = make_abelian([4, 4])
    found = find_central_elementary_abelian(G, 2)
    target = subgroup_generated(G, [G.element("x1^2"), G.element("x2^2")])
    assert any(s.elements == target.elements for s in found)

    GK = direct_product(make_dihedral8(), make_abelian([2]))
    a2 = GK.element("a^2")
    x1 = GK.element("x1")
    target = subgroup_generated(GK, [a2, x1])
    found = [s.elements for s in find_central_elementary_abelian(GK, 2)]
    assert target.elements in found

    G82 = make_abelian([8, 2])
    target = subgroup_generated(G82, [G82.element("x1^4"), G82.element("x2")])
    found = [s.elements for s in find_central_elementary_abelian(G82, 2)]
    assert found == [target.elements]  # the unique one


def test_group_from_spec_round_trip():
    for spec in ["D4", "Q8", {"abelian": [4, 4]},
                 {"product": ["D4", {"abelian": [2]}]}]:
        G = group_from_spec(spec)
        again = group_from_spec(G.spec)
        assert np.array_equal(G.table, again.table)
    with pytest.raises(ValueError):
        group_from_spec({"weird": 1})


def test_element_name_round_trip():
    for G in SMALL_GROUPS:
        for a in G.elements():
            assert G.element(G.name(a)) == a
    G = make_abelian([4, 4])
    assert G.element("x1^-1") == G.inv(G.element("x1"))
    with pytest.raises(ValueError):
        G.element("z9")
