"""Seed-deterministic instance corpora for the verification suites.

Per-instance seeds are derived from the base seed with numpy's SeedSequence
spawning, so suites can be re-run or parallelized with identical results.
"""

from __future__ import annotations

from collections.abc import Iterator

import numpy as np

from .graphs import (
    Graph,
    gen_half_graph_complement,
    is_connected,
    is_graph_twin_free,
)
from .hypergraph import Hypergraph
from .models import (
    SharpArcModel,
    SharpIntervalModel,
    model_to_graph,
    random_sharp_arc_model,
    random_sharp_interval_model,
)


def _rngs(seed: int, count: int) -> list[np.random.Generator]:
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]


def random_ca_hypergraph(rng: np.random.Generator, n: int) -> Hypergraph:
    """A circular-arc hypergraph by construction: random arcs of a random
    circular order of the universe."""
    base = rng.permutation(n)
    k = int(rng.integers(1, 2 * n + 1))
    edges = []
    for _ in range(k):
        start = int(rng.integers(0, n))
        length = int(rng.integers(1, n + 1))
        edges.append(frozenset(int(base[(start + t) % n]) for t in range(length)))
    return Hypergraph.from_edge_sets(edges, n=n)


def ca_hypergraph_corpus(seed: int, count: int, n_lo: int = 4, n_hi: int = 7) -> Iterator[Hypergraph]:
    for rng in _rngs(seed, count):
        n = int(rng.integers(n_lo, n_hi + 1))
        yield random_ca_hypergraph(rng, n)


def pca_graph_corpus(
    seed: int, count: int, n_lo: int = 4, n_hi: int = 9
) -> Iterator[tuple[str, Graph]]:
    """Twin-free connected PCA graphs with a healthy mix of non-bipartite,
    bipartite-connected, and disconnected complements.  The half-graph
    complements (the canonical bipartite-connected-complement family) are
    injected once per size."""
    injected = [
        (f"half-complement-{m}", gen_half_graph_complement(m)) for m in (2, 3, 4)
    ]
    yield from injected[: max(0, count)]
    remaining = count - len(injected)
    for idx, rng in enumerate(_rngs(seed, max(0, remaining))):
        for _ in range(500):
            n = int(rng.integers(n_lo, n_hi + 1))
            density = float(rng.uniform(0.15, 0.6))
            model = random_sharp_arc_model(rng, n, density, max_universal=None)
            g = model_to_graph(model)
            if is_graph_twin_free(g) and is_connected(g):
                yield f"random-pca-{idx}", g
                break
        else:
            raise RuntimeError("failed to sample a twin-free connected PCA graph")


def sharp_model_corpus(
    seed: int, count: int, n_lo: int = 1, n_hi: int = 32, arc_share: float = 0.6
) -> Iterator[tuple[str, SharpArcModel | SharpIntervalModel]]:
    """Random sharp proper models for the reconstruction round-trip; arc
    models keep at most one universal vertex (the reconstruction hypothesis)."""
    rngs = _rngs(seed, count)
    for idx, rng in enumerate(rngs):
        if rng.random() < arc_share:
            n = int(rng.integers(max(2, n_lo), n_hi + 1))
            yield f"arc-{idx}", random_sharp_arc_model(
                rng, n, float(rng.uniform(0.05, 0.95)), max_universal=1
            )
        else:
            n = int(rng.integers(n_lo, n_hi + 1))
            yield f"interval-{idx}", random_sharp_interval_model(rng, n)
