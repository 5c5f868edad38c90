import pytest

from linkset.groups import make_abelian
from linkset.linking import mu_nu_candidates
from linkset.search import (
    build_linking_graph,
    enumerate_difference_sets,
    enumerate_systems,
    max_system_size,
)


@pytest.fixture(scope="session")
def z4z4():
    return make_abelian([4, 4])


@pytest.fixture(scope="session")
def z4z4_census(z4z4):
    """Shared full census of Z4xZ4 with its wall time, computed once."""
    import time
    from types import SimpleNamespace

    start = time.time()
    records = enumerate_difference_sets(z4z4, 6)
    graph = build_linking_graph(z4z4, records, mu_nu_candidates(records[0].params)[0])
    systems = enumerate_systems(graph, 3)
    max_size = max_system_size(graph)
    return SimpleNamespace(records=records, graph=graph, systems=systems,
                           max_size=max_size, elapsed=time.time() - start)
