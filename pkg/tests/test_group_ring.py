import random
from collections import Counter

import numpy as np
import pytest

from linkset import group_ring as rg
from linkset.groups import (
    direct_product,
    make_abelian,
    make_dihedral8,
    make_quaternion8,
)
from linkset.worked_examples import linked_triple_z4z4, witness_21_z4z4


def naive_mul(G, x, y):
    """Multiset-of-products oracle: expand every (g, h) pair."""
    out = np.zeros(G.order, dtype=np.int64)
    for g in range(G.order):
        for h in range(G.order):
            out[G.mul(g, h)] += x.coeffs[g] * y.coeffs[h]
    return rg.GroupRingElement(G, out)


def random_element(G, rng, lo=-3, hi=3):
    return rg.GroupRingElement(G, np.array([rng.randint(lo, hi) for _ in G.elements()]))


def test_from_subset_and_is_subset():
    G = make_abelian([4, 4])
    s = rg.from_subset(G, [1, 5, 9])
    assert int(s.coeffs.sum()) == 3
    assert rg.is_subset(rg.all_ones(G)) == tuple(G.elements())
    assert rg.is_subset(rg.scale(2, rg.one(G))) is None
    with pytest.raises(ValueError):
        rg.from_subset(G, [1, 1])


def test_mul_matches_multiset_oracle():
    rng = random.Random(7)
    for G in [make_abelian([4, 4]), make_abelian([8, 2]), make_dihedral8(),
              make_quaternion8(), make_abelian([3, 3])]:
        for _ in range(5):
            a = rg.from_subset(G, rng.sample(range(G.order), min(8, G.order // 2)))
            b = rg.from_subset(G, rng.sample(range(G.order), min(6, G.order // 2)))
            assert rg.mul(a, b) == naive_mul(G, a, b)


def test_mul_group_mismatch():
    a = rg.one(make_abelian([4]))
    b = rg.one(make_abelian([4]))
    with pytest.raises(ValueError):
        rg.mul(a, b)  # distinct group objects


def test_mul_respects_noncommutative_order():
    D4 = make_dihedral8()
    a = rg.from_subset(D4, [D4.element("a")])
    b = rg.from_subset(D4, [D4.element("b")])
    assert rg.mul(a, b) != rg.mul(b, a)


def test_associativity():
    rng = random.Random(11)
    # exhaustive over basis elements on order <= 16
    for G in [make_abelian([4, 4]), make_dihedral8(), make_quaternion8()]:
        for g in G.elements():
            for h in G.elements():
                for k in G.elements():
                    assert G.mul(G.mul(g, h), k) == G.mul(g, G.mul(h, k))
    # random ring elements on order <= 64
    for G in [make_abelian([8, 2, 2, 2]), direct_product(make_quaternion8(), make_abelian([4, 2]))]:
        for _ in range(3):
            x, y, z = (random_element(G, rng) for _ in range(3))
            assert rg.mul(rg.mul(x, y), z) == rg.mul(x, rg.mul(y, z))


def test_involution_basic():
    G = make_abelian([4, 4])
    xy3 = G.element("x1*x2^3")
    x3y = G.element("x1^3*x2")
    e = rg.from_subset(G, [xy3])
    assert rg.is_subset(rg.involution(e)) == (x3y,)
    rng = random.Random(3)
    for _ in range(5):
        x = random_element(G, rng)
        assert rg.involution(rg.involution(x)) == x


def test_involution_antihomomorphism():
    rng = random.Random(5)
    for G in [make_dihedral8(), make_quaternion8()]:
        # exhaustive on basis elements
        for g in G.elements():
            for h in G.elements():
                x = rg.from_subset(G, [g])
                y = rg.from_subset(G, [h])
                lhs = rg.involution(rg.mul(x, y))
                rhs = rg.mul(rg.involution(y), rg.involution(x))
                assert lhs == rhs
        for _ in range(5):
            x, y = random_element(G, rng), random_element(G, rng)
            assert rg.involution(rg.mul(x, y)) == rg.mul(rg.involution(y), rg.involution(x))


def test_subset_times_all_ones():
    G = make_dihedral8()
    s = rg.from_subset(G, [0, 2, 5])
    assert rg.mul(s, rg.all_ones(G)) == rg.scale(3, rg.all_ones(G))
    assert rg.mul(rg.all_ones(G), s) == rg.scale(3, rg.all_ones(G))


def test_linked_triple_products():
    G, sets = linked_triple_z4z4()
    d1 = rg.from_subset(G, sets[0])
    d2 = rg.from_subset(G, sets[1])
    # D_i D_i^(-1) = 4*1 + 2*G
    expect = rg.add(rg.scale(4, rg.one(G)), rg.scale(2, rg.all_ones(G)))
    for s in sets:
        d = rg.from_subset(G, s)
        assert rg.mul(d, rg.involution(d)) == expect
    # D_2 D_1^(-1) = -2*D + 3*G with the recorded witness
    prod = rg.mul(d2, rg.involution(d1))
    w = rg.from_subset(G, witness_21_z4z4(G))
    assert prod == rg.add(rg.scale(-2, w), rg.scale(3, rg.all_ones(G)))


def test_decompose_two_valued():
    G, sets = linked_triple_z4z4()
    d1 = rg.from_subset(G, sets[0])
    d2 = rg.from_subset(G, sets[1])
    prod = rg.mul(d2, rg.involution(d1))
    assert rg.decompose_two_valued(prod, 1, 3) == witness_21_z4z4(G)
    # 4*1 + 2G is not {1,3}-valued (coefficient 6 at the identity)
    bad = rg.mul(d1, rg.involution(d1))
    assert rg.decompose_two_valued(bad, 1, 3) is None
    # nu*G decomposes to the empty set
    assert rg.decompose_two_valued(rg.scale(3, rg.all_ones(G)), 1, 3) == ()
    with pytest.raises(ValueError):
        rg.decompose_two_valued(prod, 2, 2)


def test_counter_oracle_matches_convolution():
    # second oracle: Counter over name pairs, independent of numpy paths
    G = make_quaternion8()
    rng = random.Random(13)
    s1 = rng.sample(range(8), 4)
    s2 = rng.sample(range(8), 4)
    counts = Counter(G.mul(g, h) for g in s1 for h in s2)
    prod = rg.mul(rg.from_subset(G, s1), rg.from_subset(G, s2))
    for a in G.elements():
        assert prod.coeffs[a] == counts.get(a, 0)
