import random

import pytest

from ca_rigidity import (
    EmptyHyperedgeError,
    Hypergraph,
    Mode,
    NotCircularArcError,
    TooLargeError,
    canonical_circular,
    count_arc_ordering_classes,
    count_interval_ordering_classes,
    enumerate_arc_orderings,
    enumerate_interval_orderings,
    gen_fig_example,
    gen_half_graph,
    gen_half_graph_complement,
    is_arc_ordering,
    is_tight_arc_ordering,
    quilliot_unique,
    quilliot_witness,
)
from ca_rigidity.graphs import (
    closed_neighborhood_hypergraph,
    open_neighborhood_hypergraph,
)

from conftest import hg, random_ca_instance


class TestCircularEnumeration:
    def test_paper_example_has_several_classes(self):
        classes = enumerate_arc_orderings(hg("ab", "abc", "bcd"), Mode.ALL)
        assert len(classes) >= 2

    def test_fig_example_neighborhoods_unique(self):
        nh = closed_neighborhood_hypergraph(gen_fig_example()).hypergraph
        assert count_arc_ordering_classes(nh, Mode.ALL) == 1

    def test_cobipartite_neighborhoods_two_tight_classes(self):
        nh = closed_neighborhood_hypergraph(gen_half_graph_complement(3)).hypergraph
        assert count_arc_ordering_classes(nh, Mode.TIGHT_ONLY) == 2

    def test_results_are_sorted_and_verified(self):
        h = hg("ab", "bc", "cd", n=5)
        classes = enumerate_arc_orderings(h, Mode.ALL)
        keys = [canonical_circular(o) for o in classes]
        assert all(is_arc_ordering(h, o) for o in classes)
        assert len(set(keys)) == len(keys)
        tights = enumerate_arc_orderings(h, Mode.TIGHT_ONLY)
        assert all(is_tight_arc_ordering(h, o) for o in tights)

    def test_cap_enforced(self):
        h = Hypergraph.from_edge_sets([{0, 1}], n=10)
        with pytest.raises(TooLargeError):
            enumerate_arc_orderings(h, Mode.ALL)
        assert count_arc_ordering_classes(h, Mode.ALL, cap_n=10) > 0

    def test_empty_hyperedge_rejected(self):
        with pytest.raises(EmptyHyperedgeError):
            enumerate_arc_orderings(Hypergraph.from_edge_sets([set(), {0}], n=3))

    def test_env_cap_override(self, monkeypatch):
        monkeypatch.setenv("CA_RIGIDITY_CAP", "4")
        h = Hypergraph.from_edge_sets([{0, 1}], n=5)
        with pytest.raises(TooLargeError):
            enumerate_arc_orderings(h, Mode.ALL)


class TestLinearEnumeration:
    def test_simplest_connected_example_is_not_rigid(self):
        assert len(enumerate_interval_orderings(hg("a", "abc"), Mode.ALL)) > 1

    def test_twin_free_overlap_connected_interval_is_rigid(self):
        assert count_interval_ordering_classes(hg("ab", "bc", "cd"), Mode.ALL) == 1

    def test_open_half_graph_neighborhoods_have_non_tight_orderings(self):
        nh = open_neighborhood_hypergraph(gen_half_graph(3)).hypergraph
        all_classes = count_interval_ordering_classes(nh, Mode.ALL)
        tight_classes = count_interval_ordering_classes(nh, Mode.TIGHT_ONLY)
        assert all_classes == 16 and tight_classes == 4
        assert all_classes > tight_classes


class TestQuilliotCriterion:
    def test_paper_example_not_unique(self):
        h = hg("ab", "abc", "bcd")
        assert not quilliot_unique(h)
        x = quilliot_witness(h)
        assert x != -1

    def test_complete_hyperedge_only(self):
        assert not quilliot_unique(Hypergraph.from_edge_sets([{0, 1, 2, 3}], n=4))

    def test_generated_neighborhood_hypergraphs(self):
        from ca_rigidity import gen_random_pca, is_connected, is_graph_twin_free
        from ca_rigidity.graphs import complement_graph, is_bipartite

        found = 0
        seed = 0
        while found < 10:
            seed += 1
            g, _ = gen_random_pca(8, 0.45, seed, twin_free=True)
            comp_bip = is_bipartite(complement_graph(g)).is_bipartite
            if not is_connected(g) or comp_bip:
                continue
            nh = closed_neighborhood_hypergraph(g).hypergraph
            assert quilliot_unique(nh) == (count_arc_ordering_classes(nh, Mode.ALL) == 1)
            found += 1

    def test_rigid_instance_beyond_enumeration_cap(self):
        # n=11 closed neighborhoods: the subset criterion still decides
        # uniqueness where enumeration cannot reach
        from ca_rigidity import gen_gk

        g, _, _ = gen_gk(4)
        nh = closed_neighborhood_hypergraph(g).hypergraph
        assert quilliot_unique(nh)

    def test_not_ca_raises(self):
        h = hg("ac", "ab", "bc", "abcd", "cd", "ad", n=4)
        if count_arc_ordering_classes(h, Mode.ALL) == 0:
            with pytest.raises(NotCircularArcError):
                quilliot_unique(h)

    def test_equivalence_on_random_corpus(self):
        rng = random.Random(23)
        for _ in range(400):
            h = random_ca_instance(rng, rng.randint(4, 7))
            unique = quilliot_unique(h, check_ca=False)
            assert unique == (count_arc_ordering_classes(h, Mode.ALL) == 1)
