import random

import pytest
from hypothesis import HealthCheck, settings

from ca_rigidity import Graph, Hypergraph

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def hg(*edge_sets, n=None):
    """Hypergraph over letter labels from iterables of letters."""
    universe = set()
    for s in edge_sets:
        universe |= set(s)
    if n is None:
        n = max(ord(c) - ord("a") for c in universe) + 1 if universe else 1
    return Hypergraph.from_edge_sets(
        [{ord(c) - ord("a") for c in s} for s in edge_sets], n=n
    )


def random_ca_instance(rng: random.Random, n: int, max_edges: int = 10) -> Hypergraph:
    base = list(range(n))
    rng.shuffle(base)
    edges = []
    for _ in range(rng.randint(1, max_edges)):
        start = rng.randrange(n)
        length = rng.randint(1, n)
        edges.append(frozenset(base[(start + t) % n] for t in range(length)))
    return Hypergraph.from_edge_sets(edges, n=n)


@pytest.fixture
def fig_example() -> Graph:
    from ca_rigidity import gen_fig_example

    return gen_fig_example()
