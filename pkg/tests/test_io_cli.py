import json
import random

import jsonschema
import numpy as np
import pytest

from ca_rigidity import (
    CircularOrder,
    LinearOrder,
    ParseError,
    gen_fig_example,
    gen_random_pca,
    random_sharp_arc_model,
    random_sharp_interval_model,
    round_orientation,
)
from ca_rigidity import io as docio
from ca_rigidity.cli import main

from conftest import random_ca_instance


def schema(name):
    import importlib.resources as res

    with res.files("ca_rigidity.schemas").joinpath(name).open() as f:
        return json.load(f)


class TestDocumentRoundTrips:
    def test_hypergraph(self):
        rng = random.Random(1)
        for _ in range(30):
            h = random_ca_instance(rng, rng.randint(1, 8))
            parsed, dropped = docio.parse_hypergraph(docio.emit_hypergraph(h))
            assert parsed == h and dropped == 0

    def test_graph(self):
        for seed in range(10):
            g, _ = gen_random_pca(7, 0.5, seed)
            assert docio.parse_graph(docio.emit_graph(g)) == g

    def test_models(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            m = random_sharp_arc_model(rng, int(rng.integers(1, 10)), 0.5)
            parsed, labels = docio.parse_model(docio.emit_model(m))
            assert parsed == m
            mi = random_sharp_interval_model(rng, int(rng.integers(1, 10)))
            parsed_i, _ = docio.parse_model(docio.emit_model(mi))
            assert parsed_i == mi

    def test_orders(self):
        labels = ("a", "b", "c", "d")
        for order in (CircularOrder((2, 0, 3, 1)), LinearOrder((1, 3, 0, 2))):
            parsed, _ = docio.parse_order(docio.emit_order(order, labels), labels)
            assert parsed == order and type(parsed) is type(order)

    def test_orientation(self):
        m = random_sharp_arc_model(np.random.default_rng(3), 6, 0.5)
        d = round_orientation(m)
        assert docio.parse_orientation(docio.emit_orientation(d)) == d

    def test_comments_and_blanks_ignored(self):
        text = "# header\n\nvertices: a b\n  # indented comment\nedge: a b  # trailing\n"
        h, _ = docio.parse_hypergraph(text)
        assert h.n == 2 and len(h.edges) == 1

    def test_duplicate_edges_counted(self):
        text = "vertices: a b c\nedge: a b\nedge: b a\n"
        h, dropped = docio.parse_hypergraph(text)
        assert len(h.edges) == 1 and dropped == 1


class TestParseErrors:
    def test_unknown_vertex_carries_position(self):
        with pytest.raises(ParseError) as exc:
            docio.parse_hypergraph("vertices: a b\nedge: a q\n")
        assert exc.value.line == 2 and exc.value.column == 9

    def test_edge_before_vertices(self):
        with pytest.raises(ParseError) as exc:
            docio.parse_graph("edge: a b\nvertices: a b\n")
        assert exc.value.line == 1

    def test_loop_rejected(self):
        with pytest.raises(ParseError):
            docio.parse_graph("vertices: a b\nedge: a a\n")

    def test_unknown_directive(self):
        with pytest.raises(ParseError) as exc:
            docio.parse_graph("vertices: a\nfoo: bar\n")
        assert exc.value.line == 2

    def test_malformed_model(self):
        with pytest.raises(ParseError):
            docio.parse_model("n: 2\narc a 1 2\narc b 2 3\n")

    def test_graph_edge_arity(self):
        with pytest.raises(ParseError):
            docio.parse_graph("vertices: a b c\nedge: a b c\n")


class TestDot:
    def test_graph_dot(self):
        dot = docio.graph_to_dot(gen_fig_example())
        assert dot.startswith("graph G {") and '"a" -- "b";' in dot

    def test_orientation_dot(self):
        m = random_sharp_arc_model(np.random.default_rng(4), 5, 0.5)
        dot = docio.orientation_to_dot(round_orientation(m))
        assert dot.startswith("digraph D {") and "->" in dot


class TestCli:
    def test_analyze_hypergraph_not_unique(self, capsys, tmp_path):
        doc = tmp_path / "h.hypergraph"
        doc.write_text("vertices: a b c d\nedge: a b\nedge: a b c\nedge: b c d\n")
        rc = main(["analyze-hypergraph", str(doc), "--json", "--enumerate"])
        assert rc == 0
        report = json.loads(capsys.readouterr().out)
        jsonschema.validate(report, schema("hypergraph_analysis.schema.json"))
        assert report["rigidity"]["arc"]["status"] == "NotUnique"
        assert report["oracle"]["circular_classes"] >= 2

    def test_analyze_hypergraph_fig_neighborhoods_unique(self, capsys, tmp_path):
        g = gen_fig_example()
        from ca_rigidity import closed_neighborhood_hypergraph

        nh = closed_neighborhood_hypergraph(g).hypergraph
        doc = tmp_path / "nh.hypergraph"
        doc.write_text(docio.emit_hypergraph(nh))
        rc = main(["analyze-hypergraph", str(doc), "--json"])
        assert rc == 0
        report = json.loads(capsys.readouterr().out)
        assert report["rigidity"]["arc"]["status"] == "UniqueArc"

    def test_analyze_hypergraph_rejects_empty_edge(self, capsys, tmp_path):
        doc = tmp_path / "h.hypergraph"
        doc.write_text("vertices: a b\nedge:\n")
        rc = main(["analyze-hypergraph", str(doc), "--json"])
        assert rc == 1
        report = json.loads(capsys.readouterr().out)
        assert any("empty hyperedge" in e for e in report["errors"])

    def test_analyze_graph_json_schema(self, capsys, tmp_path):
        doc = tmp_path / "g.graph"
        doc.write_text(docio.emit_graph(gen_fig_example()))
        rc = main(["analyze-graph", str(doc), "--json", "--reconstruct", "--dot"])
        assert rc == 0
        report = json.loads(capsys.readouterr().out)
        jsonschema.validate(report, schema("graph_analysis.schema.json"))
        assert report["proper_circular_arc"]["is_member"] is True
        assert report["neighborhood_rigidity"]["case"] == "non-bipartite-complement"
        parsed, _ = docio.parse_model(report["model_document"])
        assert parsed.n == 6

    def test_analyze_graph_require_connected(self, capsys, tmp_path):
        doc = tmp_path / "g.graph"
        doc.write_text("vertices: a b c d\nedge: a b\nedge: c d\n")
        assert main(["analyze-graph", str(doc), "--require-connected"]) == 2

    def test_analyze_single_vertex_reports_small_instance(self, capsys, tmp_path):
        doc = tmp_path / "g.graph"
        doc.write_text("vertices: a\n")
        assert main(["analyze-graph", str(doc), "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["neighborhood_rigidity"]["case"] == "small-instance"

    def test_stdin_input(self, capsys, monkeypatch):
        import io as _io

        monkeypatch.setattr("sys.stdin", _io.StringIO("vertices: a b\nedge: a b\n"))
        assert main(["analyze-hypergraph", "-", "--json"]) == 0
        json.loads(capsys.readouterr().out)

    def test_parse_error_exit_code(self, capsys, tmp_path):
        doc = tmp_path / "bad.graph"
        doc.write_text("vertices: a\nedge: a q\n")
        assert main(["analyze-graph", str(doc)]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_generate_gk(self, capsys):
        assert main(["generate", "gk", "3"]) == 0
        g = docio.parse_graph(capsys.readouterr().out)
        assert g.n == 8

    def test_generate_half(self, capsys):
        assert main(["generate", "half", "3"]) == 0
        g = docio.parse_graph(capsys.readouterr().out)
        assert g.n == 6 and len(g.edges()) == 6

    def test_generate_random_pca_deterministic(self, capsys):
        assert main(["generate", "random-pca", "--n", "10", "--density", "0.5", "--seed", "42"]) == 0
        first = capsys.readouterr().out
        assert main(["generate", "random-pca", "--n", "10", "--density", "0.5", "--seed", "42"]) == 0
        assert capsys.readouterr().out == first

    def test_generate_model_document(self, capsys):
        assert main(["generate", "gk", "2", "--model"]) == 0
        model, _ = docio.parse_model(capsys.readouterr().out)
        assert model.n == 5

    def test_verify_all_green(self, capsys):
        rc = main(["verify", "--suite", "all", "--count", "40", "--seed", "3"])
        out = capsys.readouterr().out
        summary = json.loads(out)
        jsonschema.validate(summary, schema("verify_summary.schema.json"))
        assert rc == 0 and summary["ok"] is True

    def test_verify_corpus_roundtrip_and_corruption(self, capsys, tmp_path):
        corpus = tmp_path / "corpus"
        rc = main(
            ["verify", "--suite", "roundtrip", "--corpus", str(corpus), "--count", "20", "--seed", "5"]
        )
        assert rc == 0
        capsys.readouterr()
        # corrupt one model document: duplicate endpoint
        victim = next(p for p in sorted(corpus.iterdir()) if p.suffix == ".model")
        lines = victim.read_text().splitlines()
        parts = lines[1].split()
        parts[2] = parts[3]
        lines[1] = " ".join(parts)
        victim.write_text("\n".join(lines) + "\n")
        rc = main(
            ["verify", "--suite", "roundtrip", "--corpus", str(corpus), "--count", "20", "--seed", "5"]
        )
        summary = json.loads(capsys.readouterr().out)
        assert rc == 1 and summary["ok"] is False
        assert any(
            v["instance"] == victim.name and "ParseError" in v["witness"]["error"]
            for v in summary["parse_failures"]
        )
