import itertools
from collections import Counter

import pytest

from linkset import group_ring as rg
from linkset.designs import (
    DSParams,
    complement,
    hyperplanes,
    is_difference_set,
    is_reversible,
    kraemer_exists,
    make_record,
    mcfarland_construct,
    spence_construct,
    two_group_params,
)
from linkset.groups import (
    coset_transversal,
    find_central_elementary_abelian,
    make_abelian,
    subgroup_generated,
)
from linkset.worked_examples import linked_triple_z4z4


def naive_is_difference_set(G, S):
    """All-pairs difference-multiset oracle straight from the definition."""
    S = list(S)
    counts = Counter(G.mul(a, G.inv(b)) for a in S for b in S if a != b)
    lams = {counts.get(g, 0) for g in G.elements() if g != 0}
    if len(S) <= 1:
        lam = 0
    elif len(lams) != 1:
        return None
    else:
        lam = lams.pop()
    return (G.order, len(S), lam, len(S) - lam)


def test_params_validation():
    with pytest.raises(ValueError):
        DSParams(16, 6, 2, 3)
    with pytest.raises(ValueError):
        DSParams(16, 7, 2, 5)


def test_is_difference_set_examples():
    G, sets = linked_triple_z4z4()
    assert is_difference_set(G, sets[0]).as_tuple() == (16, 6, 2, 4)
    assert is_difference_set(G, [0]).as_tuple() == (16, 1, 0, 1)
    bad = [G.element(w) for w in ("1", "x1", "x1^2", "x1^3", "x2", "x2^2")]
    assert is_difference_set(G, bad) is None
    assert naive_is_difference_set(G, bad) is None


def test_verifier_matches_oracle_on_all_6_subsets(z4z4):
    hits = 0
    for combo in itertools.combinations(range(16), 6):
        got = is_difference_set(z4z4, combo)
        want = naive_is_difference_set(z4z4, combo)
        assert (got.as_tuple() if got else None) == want or (got is None and want is None)
        if got is not None:
            hits += 1
    assert hits == 192  # derived constant, frozen after first exhaustive run


def test_complement():
    G, sets = linked_triple_z4z4()
    rec = make_record(G, sets[0])
    comp = complement(rec)
    assert comp.params.as_tuple() == (16, 10, 6, 4)
    assert is_difference_set(G, comp.elements).as_tuple() == (16, 10, 6, 4)
    assert complement(comp).elements == rec.elements


def test_is_reversible():
    G, sets = linked_triple_z4z4()
    flags = [is_reversible(make_record(G, s)) for s in sets]
    assert flags == [True, False, False]
    # subgroups are inverse-closed; {1} and G are the subgroup difference sets
    assert is_reversible(make_record(G, (0,)))
    assert is_reversible(make_record(G, tuple(G.elements())))


def test_two_group_params():
    assert two_group_params(4).as_tuple() == (16, 6, 2, 4)
    assert two_group_params(6).as_tuple() == (64, 28, 12, 16)
    assert two_group_params(2).as_tuple() == (4, 1, 0, 1)
    with pytest.raises(ValueError):
        two_group_params(5)


def test_kraemer():
    assert kraemer_exists(make_abelian([8, 2, 2, 2]))
    assert not kraemer_exists(make_abelian([32, 2]))
    assert kraemer_exists(make_abelian([2] * 6))
    with pytest.raises(ValueError):
        kraemer_exists(make_abelian([4, 2]))  # order 8 is not 2^(2d+2)


def test_hyperplane_counts():
    G = make_abelian([2, 2])
    E = subgroup_generated(G, [1, 2])
    fam = hyperplanes(E, 2, (G.element("x1"), G.element("x2")))
    assert fam.count == 3 and all(m.order == 2 for m in fam.members)

    G = make_abelian([2, 2, 2])
    E = subgroup_generated(G, list(range(1, 8)))
    fam = hyperplanes(E, 2, tuple(G.element(w) for w in ("x1", "x2", "x3")))
    assert fam.count == 7 and all(m.order == 4 for m in fam.members)

    G = make_abelian([3, 3])
    E = subgroup_generated(G, [G.element("x1"), G.element("x2")])
    fam = hyperplanes(E, 3, (G.element("x1"), G.element("x2")))
    assert fam.count == 4 and all(m.order == 3 for m in fam.members)

    G = make_abelian([4])
    with pytest.raises(ValueError):
        hyperplanes(subgroup_generated(G, [G.element("x1")]), 2, (G.element("x1"),))


@pytest.mark.parametrize("q,dmax", [(2, 3), (3, 3)])
def test_hyperplane_products(q, dmax):
    """H_i H_j = q^d H_i when i = j and q^(d-1) E otherwise."""
    for d in range(1, dmax + 1):
        E_group = make_abelian([q] * (d + 1))
        E = subgroup_generated(E_group, [E_group.element(f"x{i+1}") for i in range(d + 1)])
        fam = hyperplanes(E, q, tuple(E_group.element(f"x{i+1}") for i in range(d + 1)))
        allg = rg.all_ones(E_group)
        ring = [rg.from_subset(E_group, H.elements) for H in fam.members]
        for i, hi in enumerate(ring):
            for j, hj in enumerate(ring):
                prod = rg.mul(hi, hj)
                if i == j:
                    assert prod == rg.scale(q ** d, hi)
                else:
                    assert prod == rg.scale(q ** (d - 1), allg)


def test_mcfarland_reproduces_first_triple_member(z4z4):
    G = z4z4
    _, sets = linked_triple_z4z4()
    E = subgroup_generated(G, [G.element("x1^2"), G.element("x2^2")])
    fam = hyperplanes(E, 2, (G.element("x1^2"), G.element("x2^2")))
    reps = [0, G.element("x1"), G.element("x2"), G.element("x1*x2^3")]
    rec = mcfarland_construct(G, fam, reps, [1, 2, 3])
    assert rec.elements == tuple(sets[0])
    assert rec.params.as_tuple() == (16, 6, 2, 4)


def test_mcfarland_q3():
    G = make_abelian([3, 3, 5])
    E = find_central_elementary_abelian(G, 2, p=3)[0]
    fam = hyperplanes(E, 3, (G.element("x1"), G.element("x2")))
    reps = coset_transversal(G, E).reps
    rec = mcfarland_construct(G, fam, reps, [1, 2, 3, 4])
    assert rec.params.as_tuple() == (45, 12, 3, 9)


def test_mcfarland_degenerate():
    G = make_abelian([2, 2])
    E = subgroup_generated(G, [G.element("x1")])
    fam = hyperplanes(E, 2, (G.element("x1"),))
    rec = mcfarland_construct(G, fam, [0, G.element("x2")], [1])
    assert rec.params.as_tuple() == (4, 1, 0, 1)


def test_mcfarland_errors(z4z4):
    G = z4z4
    E = subgroup_generated(G, [G.element("x1^2"), G.element("x2^2")])
    fam = hyperplanes(E, 2, (G.element("x1^2"), G.element("x2^2")))
    reps = coset_transversal(G, E).reps
    with pytest.raises(ValueError):
        mcfarland_construct(G, fam, reps, [1, 1, 2])  # not injective
    with pytest.raises(ValueError):
        mcfarland_construct(G, fam, reps[:3], [1, 2, 3])  # wrong transversal size


@pytest.mark.parametrize("factors", [[3, 3, 2, 2], [3, 3, 4]])
def test_spence(factors):
    G = make_abelian(factors)
    E = find_central_elementary_abelian(G, 2, p=3)[0]
    fam = hyperplanes(E, 3, _basis3(G, E))
    reps = coset_transversal(G, E).reps
    for m in range(4):
        rec = spence_construct(G, fam, reps, m)
        assert rec.params.as_tuple() == (36, 15, 6, 9)
        # |E \ H| + (s-1)|H| = 6 + 9 = 15
        assert len(rec.elements) == 15


def _basis3(G, E):
    basis, span = [], {0}
    for a in E.elements:
        if a not in span:
            basis.append(a)
            span = {G.mul(x, G.power(a, e)) for x in span for e in range(3)}
    return tuple(basis)
