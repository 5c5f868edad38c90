import itertools
import random

import numpy as np
import pytest

from linkset import group_ring as rg
from linkset.designs import is_difference_set
from linkset.groups import make_abelian
from linkset.linking import mu_nu_candidates, verify_reduced
from linkset.search import (
    build_linking_graph,
    census_systems,
    enumerate_difference_sets,
    enumerate_systems,
    max_system_size,
    mcfarland_pair_sweep,
    spence_pair_sweep,
)
from linkset.worked_examples import linked_triple_z4z4


def test_enumerate_singletons():
    G = make_abelian([2, 2])
    records = enumerate_difference_sets(G, 1)
    assert [r.elements for r in records] == [(0,), (1,), (2,), (3,)]
    assert all(r.params.as_tuple() == (4, 1, 0, 1) for r in records)


def test_enumerate_z4z4_count(z4z4_census):
    records = z4z4_census.records
    assert len(records) == 192  # derived constant, frozen
    # lexicographic order over element tuples
    assert [r.elements for r in records] == sorted(r.elements for r in records)


def test_enumerate_z8z2_nonempty():
    G = make_abelian([8, 2])
    records = enumerate_difference_sets(G, 6)
    assert len(records) == 192  # derived constant, frozen
    assert all(r.params.as_tuple() == (16, 6, 2, 4) for r in records)


def test_graph_triple_adjacent(z4z4, z4z4_census):
    records, graph = z4z4_census.records, z4z4_census.graph
    _, sets = linked_triple_z4z4()
    index = {r.elements: i for i, r in enumerate(records)}
    ids = [index[tuple(s)] for s in sets]
    for i, j in itertools.permutations(ids, 2):
        assert graph.adjacency[i, j]
    assert not graph.adjacency.diagonal().any()


def test_graph_symmetry(z4z4_census):
    graph = z4z4_census.graph
    assert np.array_equal(graph.adjacency, graph.adjacency.T)


def test_directed_check_symmetric_by_involution(z4z4, z4z4_census):
    """If D_i D_j^(-1) decomposes with witness W, the reverse order
    decomposes with witness W^(-1); spot-check the computational fact."""
    records, graph = z4z4_census.records, z4z4_census.graph
    rng = random.Random(5)
    munu = graph.munu
    for _ in range(200):
        i, j = rng.randrange(len(records)), rng.randrange(len(records))
        if i == j:
            continue
        xi = records[i].ring_element()
        xj = records[j].ring_element()
        fwd = rg.decompose_two_valued(rg.mul(xi, rg.involution(xj)), *munu.as_tuple())
        bwd = rg.decompose_two_valued(rg.mul(xj, rg.involution(xi)), *munu.as_tuple())
        assert (fwd is None) == (bwd is None)
        if fwd is not None:
            assert tuple(sorted(z4z4.inv(a) for a in fwd)) == bwd


def test_census_counts(z4z4_census):
    graph, systems, max_size = z4z4_census.graph, z4z4_census.systems, z4z4_census.max_size
    assert len(systems) == 65536
    assert max_size == 3
    assert enumerate_systems(graph, 4) == []


def test_census_substructure(z4z4_census):
    records, graph = z4z4_census.records, z4z4_census.graph
    assert graph.num_edges() == 6144  # derived constant, frozen
    # every edge is a size-2 reduced system; spot-verify a sample
    edges = np.argwhere(graph.adjacency)
    rng = random.Random(8)
    for _ in range(20):
        i, j = edges[rng.randrange(len(edges))]
        assert verify_reduced(graph.group, [records[i].elements, records[j].elements])


def test_census_deterministic(z4z4_census):
    graph, systems = z4z4_census.graph, z4z4_census.systems
    again = enumerate_systems(graph, 3, reverify=False)
    assert [[r.elements for r in s] for s in systems] == \
        [[r.elements for r in s] for s in again]


def test_census_with_jobs_matches(z4z4, z4z4_census):
    records, graph = z4z4_census.records, z4z4_census.graph
    munu = mu_nu_candidates(records[0].params)[0]
    parallel = build_linking_graph(z4z4, records, munu, jobs=2)
    assert np.array_equal(parallel.adjacency, graph.adjacency)


def test_translation_invariance(z4z4, z4z4_census):
    """linking success of (D1, D2) equals that of (aD1, D2b) in abelian G."""
    records, graph = z4z4_census.records, z4z4_census.graph
    G = z4z4
    rng = random.Random(12)
    munu = graph.munu
    for _ in range(50):
        r1 = records[rng.randrange(len(records))]
        r2 = records[rng.randrange(len(records))]
        a, b = rng.randrange(16), rng.randrange(16)
        t1 = tuple(sorted(G.mul(a, x) for x in r1.elements))
        t2 = tuple(sorted(G.mul(x, b) for x in r2.elements))

        def links(s1, s2):
            prod = rg.mul(rg.from_subset(G, s1), rg.involution(rg.from_subset(G, s2)))
            support = rg.decompose_two_valued(prod, *munu.as_tuple())
            if support is None:
                return False
            return is_difference_set(G, support) == r1.params

        assert links(r1.elements, r2.elements) == links(t1, t2)


def test_z8z2_no_systems():
    G = make_abelian([8, 2])
    result = census_systems(G, 6, 2)
    assert len(result.graph.records) == 192
    assert result.count == 0
    assert result.max_size <= 1


def test_mcfarland_sweep_structure():
    report = mcfarland_pair_sweep(make_abelian([3, 3, 5]), mode="pruned")
    assert report.constructed_count == 5 * 24 * 81  # 9720
    assert report.distinct_count == 9720
    assert report.class_count == 216
    assert report.munu == (1, 4)
    assert report.linked_pairs == 0
    assert report.verified_sets == report.distinct_count  # all are (45,12,3,9) sets
    with pytest.raises(ValueError):
        mcfarland_pair_sweep(make_abelian([3, 3, 5]), mode="bogus")
    with pytest.raises(ValueError):
        mcfarland_pair_sweep(make_abelian([3, 3]), mode="full")


def test_mcfarland_constructed_sets_are_difference_sets():
    G = make_abelian([3, 3, 5])
    from linkset.designs import hyperplanes
    from linkset.groups import coset_transversal, find_central_elementary_abelian

    E = find_central_elementary_abelian(G, 2, p=3)[0]
    fam = hyperplanes(E, 3, (G.element("x1"), G.element("x2")))
    reps = coset_transversal(G, E).reps
    rng = random.Random(3)
    for _ in range(10):
        omitted = rng.randrange(5)
        cosets = [reps[i] for i in range(5) if i != omitted]
        perm = rng.sample(range(4), 4)
        elems = []
        for slot in range(4):
            g = cosets[perm[slot]]
            elems.extend(G.mul(g, h) for h in fam.members[slot].elements)
        params = is_difference_set(G, elems)
        assert params is not None and params.as_tuple() == (45, 12, 3, 9)


def test_spence_sweep_structure():
    report = spence_pair_sweep(make_abelian([3, 3, 2, 2]), mode="pruned")
    assert report.constructed_count == 4 * 24 * 81  # 7776
    assert report.munu == (8, 5)
    assert report.linked_pairs == 0
    assert report.verified_sets == report.distinct_count  # all are (36,15,6,9) sets
    assert report.same_slot_pairs > 0 and report.cross_slot_pairs > 0


def brute_max_clique(adj):
    n = len(adj)
    for r in range(n, 0, -1):
        for combo in itertools.combinations(range(n), r):
            if all(adj[i][j] for i in combo for j in combo if i < j):
                return r
    return 0


def test_max_system_size_matches_brute_force():
    from linkset.linking import MuNu
    from linkset.search import LinkingGraph

    rng = random.Random(42)
    for _ in range(20):
        n = rng.randint(3, 11)
        adj = np.zeros((n, n), dtype=bool)
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.5:
                    adj[i, j] = adj[j, i] = True
        graph = LinkingGraph(make_abelian([2]), tuple(range(n)), MuNu(1, 3, True), adj)
        assert max_system_size(graph) == brute_max_clique(adj.tolist())


def test_enumerate_systems_matches_brute_force():
    from linkset.linking import MuNu
    from linkset.search import LinkingGraph

    rng = random.Random(43)
    for _ in range(10):
        n = rng.randint(4, 10)
        adj = np.zeros((n, n), dtype=bool)
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.6:
                    adj[i, j] = adj[j, i] = True
        graph = LinkingGraph(make_abelian([2]), tuple(range(n)), MuNu(1, 3, True), adj)
        got = {tuple(c) for c in enumerate_systems(graph, 3, reverify=False)}
        want = {c for c in itertools.combinations(range(n), 3)
                if all(adj[i][j] for i in c for j in c if i < j)}
        assert got == want
