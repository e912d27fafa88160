import itertools
import random

import pytest

from ca_rigidity import (
    CircleArc,
    CircularOrder,
    EdgeRelation,
    EmptyHyperedgeError,
    Hypergraph,
    InconsistentPlacementError,
    Mode,
    RelationViolatedError,
    TooLargeError,
    canonical_circular,
    count_arc_ordering_classes,
    enumerate_arc_orderings,
    extend_placement,
    gen_fig_example,
    is_arc_ordering,
    is_tight_arc_ordering,
    quilliot_unique,
    solve_arc_ordering,
    strip_trivial_hyperedges,
)
from ca_rigidity.bitset import mask_of
from ca_rigidity.graphs import closed_neighborhood_hypergraph
from ca_rigidity.hypergraph import relation_holds, strictly_intersects

from conftest import hg, random_ca_instance


def placed(h_edge: int, order: CircularOrder) -> CircleArc:
    """Arc of circle positions a hyperedge occupies under an ordering."""
    n = order.n
    positions = sorted(order.pos[v] for v in range(n) if h_edge >> v & 1)
    size = len(positions)
    pos_set = set(positions)
    for p in positions:
        if (p - 1) % n not in pos_set:
            return CircleArc.from_start_size(n, p, size)
    raise AssertionError("hyperedge is not consecutive under the order")


class TestExtendPlacement:
    def test_identity_case(self):
        a = b = mask_of([0, 1])
        arc = CircleArc.from_start_size(5, 0, 2)
        assert extend_placement(arc, arc, a, b, b, 5) == arc

    def test_chain_extends_clockwise(self):
        # place {a,b} then {b,c}; extending by {c,d} must continue clockwise,
        # reproducing the order a,b,c,d,(e)
        n = 5
        a, b, h = mask_of([0, 1]), mask_of([1, 2]), mask_of([2, 3])
        pa = CircleArc.from_start_size(n, 0, 2)
        pb = CircleArc.from_start_size(n, 1, 2)
        ph = extend_placement(pa, pb, a, b, h, n)
        assert (ph.start, ph.end) == (2, 3)

    def test_fig_example_stripped_core_solves_to_oracle_class(self):
        nh = closed_neighborhood_hypergraph(gen_fig_example()).hypergraph
        core = strip_trivial_hyperedges(nh)
        order = solve_arc_ordering(core)
        assert order is not None and is_arc_ordering(core, order)
        oracle = enumerate_arc_orderings(core, Mode.ALL)
        assert len(oracle) == 1
        assert canonical_circular(order) == canonical_circular(oracle[0])

    def test_rejects_unrelated_sets(self):
        n = 6
        a, b = mask_of([0, 1]), mask_of([1, 2])
        pa = CircleArc.from_start_size(n, 0, 2)
        pb = CircleArc.from_start_size(n, 1, 2)
        with pytest.raises(RelationViolatedError):
            extend_placement(pa, pb, a, b, mask_of([4, 5]), n)

    def test_rejects_empty_set(self):
        n = 4
        pa = CircleArc.from_start_size(n, 0, 2)
        with pytest.raises(EmptyHyperedgeError):
            extend_placement(pa, pa, mask_of([0, 1]), mask_of([0, 1]), 0, n)

    def test_rejects_inconsistent_sizes(self):
        n = 5
        pa = CircleArc.from_start_size(n, 0, 3)
        pb = CircleArc.from_start_size(n, 1, 2)
        with pytest.raises(InconsistentPlacementError):
            extend_placement(pa, pb, mask_of([0, 1]), mask_of([1, 2]), mask_of([2, 3]), n)

    def test_rejects_untight_nested_placement(self):
        n = 6
        a, b = mask_of([0, 1, 2, 3]), mask_of([1, 2])
        pa = CircleArc.from_start_size(n, 0, 4)
        pb = CircleArc.from_start_size(n, 1, 2)  # strictly inside, no shared endpoint
        with pytest.raises(InconsistentPlacementError):
            extend_placement(pa, pb, a, b, mask_of([1, 2, 3]), n)


class TestCaseTableAgainstEnumeration:
    def test_extension_agrees_with_every_consistent_ordering(self):
        """For strictly connected triples in CA hypergraphs, the returned arc
        occurs in every (tight, when inclusions are involved) ordering that
        extends the given placement of the first two hyperedges."""
        rng = random.Random(7)
        checked = 0
        while checked < 150:
            n = rng.randint(4, 6)
            h = random_ca_instance(rng, n, max_edges=6)
            edges = [e for e in h.edges if 0 < e.bit_count() < n]
            triples = [
                (a, b, c)
                for a in edges
                for b in edges
                for c in edges
                if len({a, b, c}) == 3
                and strictly_intersects(a, b, n)
                and strictly_intersects(b, c, n)
            ]
            if not triples:
                continue
            a, b, c = triples[rng.randrange(len(triples))]
            inclusions = not (
                relation_holds(EdgeRelation.STRICT_OVERLAP, a, b, n)
                and relation_holds(EdgeRelation.STRICT_OVERLAP, b, c, n)
            )
            sub = Hypergraph.from_edge_sets(
                [set() | {v for v in range(n) if e >> v & 1} for e in (a, b, c)], n=n
            )
            groups: dict[tuple, dict] = {}
            for perm in itertools.permutations(range(n)):
                o = CircularOrder(perm)
                if not is_arc_ordering(sub, o):
                    continue
                if inclusions and not is_tight_arc_ordering(sub, o):
                    continue
                key_a, key_b = placed(a, o), placed(b, o)
                entry = groups.setdefault((key_a, key_b), {})
                entry[placed(c, o)] = True
            if not groups:
                continue
            checked += 1
            for (pa, pb), h_arcs in groups.items():
                assert len(h_arcs) == 1, (
                    "enumeration itself says the placement is not forced",
                    sub.edges,
                )
                expected = next(iter(h_arcs))
                got = extend_placement(pa, pb, a, b, c, n)
                assert got == expected, (sub.edges, pa, pb, got, expected)


class TestSolveArcOrdering:
    def test_small_universes_use_identity(self):
        h = hg("ab", "ac", n=3)
        assert solve_arc_ordering(h).seq == (0, 1, 2)

    def test_ca_instances_solve_to_valid_orderings(self):
        rng = random.Random(31)
        for _ in range(250):
            h = random_ca_instance(rng, rng.randint(4, 9))
            order = solve_arc_ordering(h)
            assert order is not None
            assert is_arc_ordering(h, order)

    def test_agreement_with_oracle_on_arbitrary_instances(self):
        rng = random.Random(32)
        for _ in range(250):
            n = rng.randint(4, 7)
            sets = [
                frozenset(rng.sample(range(n), rng.randint(1, n)))
                for _ in range(rng.randint(1, 6))
            ]
            h = Hypergraph.from_edge_sets(sets, n=n)
            order = solve_arc_ordering(h)
            count = count_arc_ordering_classes(h, Mode.ALL)
            assert (order is not None) == (count > 0)
            if order is not None:
                assert is_arc_ordering(h, order)

    def test_unique_instances_match_oracle_class(self):
        rng = random.Random(33)
        found = 0
        while found < 60:
            h = random_ca_instance(rng, rng.randint(4, 7))
            if not quilliot_unique(h, check_ca=False):
                continue
            found += 1
            order = solve_arc_ordering(h)
            oracle = enumerate_arc_orderings(h, Mode.ALL)
            assert len(oracle) == 1
            assert canonical_circular(order) == canonical_circular(oracle[0])

    def test_constructive_path_scales_past_enumeration_cap(self):
        from ca_rigidity import gen_gk

        g, _, _ = gen_gk(6)  # 17 vertices, far beyond the cap
        nh = closed_neighborhood_hypergraph(g).hypergraph
        order = solve_arc_ordering(nh)
        assert order is not None and is_arc_ordering(nh, order)

    def test_enumeration_fallback_respects_cap(self):
        h = Hypergraph.from_edge_sets([{0, 1}, {2, 3}], n=10)
        with pytest.raises(TooLargeError):
            solve_arc_ordering(h)

    def test_rejects_empty_hyperedges(self):
        with pytest.raises(EmptyHyperedgeError):
            solve_arc_ordering(Hypergraph.from_edge_sets([set(), {0}], n=4))
