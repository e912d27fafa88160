"""Command-line surface: analyze documents, generate example families, and
run the verification suites.

Reports are plain text by default and JSON with ``--json`` (schemas ship in
``ca_rigidity/schemas``).  ``-`` reads a document from stdin.  The environment
variable ``CA_RIGIDITY_CAP`` overrides the default enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from . import io as docio
from .enumeration import Mode, count_arc_ordering_classes, count_interval_ordering_classes
from .errors import CaRigidityError, ParseError, TooLargeError
from .extension import solve_arc_ordering
from .graphs import (
    complement_graph,
    gen_fig_example,
    gen_gk,
    gen_half_graph,
    gen_half_graph_complement,
    gen_random_pca,
    graph_twin_classes,
    is_bipartite,
    is_connected,
    is_graph_twin_free,
    check_structural_lemmas,
    nrigid_verdict,
    recognize_pca,
    recognize_proper_interval,
    universal_vertices,
)
from .hypergraph import (
    EdgeRelation,
    is_twin_free,
    relation_components,
    strip_trivial_hyperedges,
    twin_classes,
)
from .models import reconstruct_arc_from_graph
from .rigidity import arc_rigidity, interval_rigidity, tight_arc_rigidity
from .verify import SUITES, run_oracle_suite, run_roundtrip_suite, run_theorems_suite


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _emit_report(report: dict[str, Any], as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    _print_tree(report, 0)


def _scalar_list(v: Any) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _print_tree(node: Any, depth: int) -> None:
    pad = "  " * depth
    if isinstance(node, dict):
        for k, v in node.items():
            if _scalar_list(v):
                print(f"{pad}{k}: " + " ".join(str(x) for x in v))
            elif isinstance(v, (dict, list)) and v:
                print(f"{pad}{k}:")
                _print_tree(v, depth + 1)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(node, list):
        for v in node:
            if _scalar_list(v):
                print(f"{pad}- " + " ".join(str(x) for x in v))
            elif isinstance(v, (dict, list)):
                _print_tree(v, depth + 1)
            else:
                print(f"{pad}- {v}")
    else:
        print(f"{pad}{node}")


def _connectivity_table(h) -> dict[str, Any]:
    table = {}
    for rel in EdgeRelation:
        comps = relation_components(h, rel)
        table[rel.value] = {
            "components": [list(c) for c in comps.components],
            "isolated_vertices": list(comps.isolated_vertices),
            "connected": comps.is_connected,
        }
    return table


def cmd_analyze_hypergraph(args) -> int:
    h, duplicates = docio.parse_hypergraph(_read_input(args.file))
    cap = args.cap
    report: dict[str, Any] = {
        "kind": "hypergraph-analysis",
        "n": h.n,
        "labels": list(h.labels),
        "hyperedges": [sorted(h.edge_labels(e)) for e in h.edges],
        "duplicates_removed": duplicates,
        "twin_classes": [[h.labels[v] for v in c] for c in twin_classes(h)],
        "twin_free": is_twin_free(h),
        "connectivity": _connectivity_table(h),
    }
    if h.has_empty_edge():
        report["errors"] = ["empty hyperedge: ordering and rigidity analysis rejected"]
        _emit_report(report, args.json)
        return 1
    order = None
    try:
        order = solve_arc_ordering(h, cap=cap)
    except TooLargeError as exc:
        report["circular_arc"] = {"status": "unknown", "reason": str(exc)}
    else:
        report["circular_arc"] = {
            "status": "yes" if order is not None else "no",
            "order": list(order.labelled(h.labels)) if order is not None else None,
        }
    verdicts = {}
    for name, fn in (("arc", arc_rigidity), ("tight_arc", tight_arc_rigidity), ("interval", interval_rigidity)):
        try:
            verdicts[name] = fn(h, cap=cap).to_dict()
        except TooLargeError as exc:
            verdicts[name] = {"status": "TooLarge", "reason": str(exc)}
    report["rigidity"] = verdicts
    if h.n >= 4 and not args.no_strip:
        core = strip_trivial_hyperedges(h)
        report["stripped_core"] = {
            "hyperedges": [sorted(h.edge_labels(e)) for e in core.edges],
            "twin_free": is_twin_free(core),
            "strict_overlap_components": [
                list(c)
                for c in relation_components(core, EdgeRelation.STRICT_OVERLAP).components
            ],
        }
    if args.enumerate:
        try:
            mode = Mode.TIGHT_ONLY if args.tight_only else Mode.ALL
            report["oracle"] = {
                "mode": mode.value,
                "circular_classes": count_arc_ordering_classes(h, mode, cap),
                "linear_classes": count_interval_ordering_classes(h, mode, cap),
            }
        except TooLargeError as exc:
            report["oracle"] = {"status": "TooLarge", "reason": str(exc)}
    _emit_report(report, args.json)
    return 0


def cmd_analyze_graph(args) -> int:
    g = docio.parse_graph(_read_input(args.file))
    if args.require_connected and not is_connected(g):
        print("error: graph is not connected (--require-connected)", file=sys.stderr)
        return 2
    cap = args.cap
    comp = complement_graph(g)
    bip = is_bipartite(comp)
    report: dict[str, Any] = {
        "kind": "graph-analysis",
        "n": g.n,
        "labels": list(g.labels),
        "edges": [[g.labels[u], g.labels[v]] for u, v in g.edges()],
        "connected": is_connected(g),
        "twin_classes": [[g.labels[v] for v in c] for c in graph_twin_classes(g)],
        "twin_free": is_graph_twin_free(g),
        "universal_vertices": [g.labels[v] for v in universal_vertices(g)],
        "complement_bipartite": bip.is_bipartite,
    }
    if bip.odd_closed_walk is not None:
        report["complement_odd_closed_walk"] = [g.labels[v] for v in bip.odd_closed_walk]
    try:
        pca = recognize_pca(g, cap=cap)
        report["proper_circular_arc"] = {
            "is_member": pca.is_member,
            "tight_order": list(pca.tight_order.labelled(g.labels)) if pca.tight_order else None,
        }
    except TooLargeError as exc:
        pca = None
        report["proper_circular_arc"] = {"status": "TooLarge", "reason": str(exc)}
    try:
        pi = recognize_proper_interval(g, cap=cap)
        report["proper_interval"] = {
            "is_member": pi.is_member,
            "tight_order": list(pi.tight_order.labelled(g.labels)) if pi.tight_order else None,
        }
    except TooLargeError as exc:
        report["proper_interval"] = {"status": "TooLarge", "reason": str(exc)}
    if pca is not None and pca.is_member and is_graph_twin_free(g) and is_connected(g):
        try:
            report["neighborhood_rigidity"] = nrigid_verdict(g, cap=cap).to_dict()
        except (TooLargeError, CaRigidityError) as exc:
            report["neighborhood_rigidity"] = {"status": "unavailable", "reason": str(exc)}
        if not bip.is_bipartite and pca.tight_order is not None:
            report["structural_checks"] = check_structural_lemmas(g, pca.tight_order).to_dict()
    if args.dot:
        report["dot"] = docio.graph_to_dot(g)
    if args.reconstruct:
        emitted = None
        if pca is not None and pca.is_member:
            try:
                model, _ = reconstruct_arc_from_graph(g, cap=cap)
                emitted = docio.emit_model(model, g.labels)
            except CaRigidityError as exc:
                report["reconstruction_error"] = str(exc)
        report["model_document"] = emitted
    _emit_report(report, args.json)
    return 0


def cmd_generate(args) -> int:
    family = args.family
    params = args.params
    model = None
    labels = None

    def int_param(idx, default):
        return int(params[idx]) if len(params) > idx else default

    if family == "half":
        g = gen_half_graph(int_param(0, 3))
    elif family == "half-complement":
        g = gen_half_graph_complement(int_param(0, 3))
    elif family == "gk":
        g, model, _ = gen_gk(int_param(0, 3))
        labels = g.labels
    elif family == "fig-example":
        g = gen_fig_example()
    elif family == "random-pca":
        n = int_param(0, args.n)
        density = float(params[1]) if len(params) > 1 else args.density
        seed = int_param(2, args.seed)
        if n is None or density is None:
            print("error: random-pca needs n and density", file=sys.stderr)
            return 2
        g, model = gen_random_pca(n, density, seed)
        labels = g.labels
    else:
        print(f"error: unknown family {family!r}", file=sys.stderr)
        return 2
    if args.model:
        if model is None:
            print(f"error: family {family!r} does not define a model", file=sys.stderr)
            return 2
        sys.stdout.write(docio.emit_model(model, labels))
        return 0
    if args.dot:
        sys.stdout.write(docio.graph_to_dot(g))
        return 0
    sys.stdout.write(docio.emit_graph(g))
    return 0


def _materialize_corpus(corpus: Path, seed: int, counts: dict[str, int]) -> None:
    from .corpus import ca_hypergraph_corpus, pca_graph_corpus, sharp_model_corpus

    corpus.mkdir(parents=True, exist_ok=True)
    if any(corpus.iterdir()):
        return
    for i, h in enumerate(ca_hypergraph_corpus(seed, counts["hypergraphs"])):
        (corpus / f"hypergraph-{i:05d}.hypergraph").write_text(docio.emit_hypergraph(h))
    for i, (ident, g) in enumerate(pca_graph_corpus(seed + 1, counts["graphs"])):
        (corpus / f"graph-{i:05d}-{ident}.graph").write_text(docio.emit_graph(g))
    for i, (ident, m) in enumerate(sharp_model_corpus(seed + 2, counts["models"])):
        (corpus / f"model-{i:05d}-{ident}.model").write_text(docio.emit_model(m))


def cmd_verify(args) -> int:
    counts = {"hypergraphs": args.count, "graphs": max(20, args.count // 10), "models": args.count}
    parse_failures: list[dict[str, Any]] = []
    loaded_h: list = []
    loaded_g: list = []
    loaded_m: list = []
    use_loaded = False
    if args.corpus:
        corpus = Path(args.corpus)
        _materialize_corpus(corpus, args.seed, counts)
        use_loaded = True
        for path in sorted(corpus.iterdir()):
            try:
                if path.suffix == ".hypergraph":
                    loaded_h.append((path.stem, docio.parse_hypergraph(path.read_text())[0]))
                elif path.suffix == ".graph":
                    loaded_g.append((path.stem, docio.parse_graph(path.read_text())))
                elif path.suffix == ".model":
                    loaded_m.append((path.stem, docio.parse_model(path.read_text())[0]))
            except CaRigidityError as exc:
                parse_failures.append(
                    {"instance": path.name, "property": "document-parses",
                     "witness": {"error": type(exc).__name__, "message": str(exc)}}
                )
    results = []
    if args.suite in ("theorems", "all"):
        results.append(
            run_theorems_suite(
                args.seed,
                counts["hypergraphs"],
                counts["graphs"],
                loaded=(loaded_h, loaded_g) if use_loaded else None,
            )
        )
    if args.suite in ("roundtrip", "all"):
        results.append(
            run_roundtrip_suite(args.seed, counts["models"], loaded=loaded_m if use_loaded else None)
        )
    if args.suite in ("oracle", "all"):
        results.append(run_oracle_suite(args.seed, max(30, args.count // 20)))
    summary = {
        "kind": "verify-summary",
        "suites": [r.to_dict() for r in results],
        "parse_failures": sorted(parse_failures, key=lambda v: str(v["instance"])),
        "ok": all(r.ok for r in results) and not parse_failures,
    }
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0 if summary["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ca-rigidity",
        description="Arc/interval ordering rigidity toolkit for hypergraphs and graphs",
    )
    sub = p.add_subparsers(dest="command", required=True)

    ph = sub.add_parser("analyze-hypergraph", help="twin classes, connectivity, rigidity verdicts")
    ph.add_argument("file", help="hypergraph document, or - for stdin")
    ph.add_argument("--json", action="store_true")
    ph.add_argument("--enumerate", action="store_true", help="include oracle class counts")
    ph.add_argument("--tight-only", action="store_true", help="count tight classes only")
    ph.add_argument("--cap", type=int, default=None, help="enumeration cap override")
    ph.add_argument("--no-strip", action="store_true", help="omit the stripped-core section")
    ph.set_defaults(fn=cmd_analyze_hypergraph)

    pg = sub.add_parser("analyze-graph", help="recognition, neighborhood rigidity, structural checks")
    pg.add_argument("file")
    pg.add_argument("--json", action="store_true")
    pg.add_argument("--cap", type=int, default=None)
    pg.add_argument("--reconstruct", action="store_true", help="emit a sharp model document")
    pg.add_argument("--require-connected", action="store_true")
    pg.add_argument("--dot", action="store_true", help="include DOT export")
    pg.set_defaults(fn=cmd_analyze_graph)

    pgen = sub.add_parser("generate", help="emit example family documents")
    pgen.add_argument("family", choices=["half", "half-complement", "gk", "fig-example", "random-pca"])
    pgen.add_argument(
        "params",
        nargs="*",
        help="family parameters: m/k for half/half-complement/gk, 'n density [seed]' for random-pca",
    )
    pgen.add_argument("--n", type=int, default=None, help="random-pca: vertex count")
    pgen.add_argument("--density", type=float, default=None, help="random-pca: arc density")
    pgen.add_argument("--seed", type=int, default=0)
    pgen.add_argument("--model", action="store_true", help="emit the model document instead")
    pgen.add_argument("--dot", action="store_true")
    pgen.set_defaults(fn=cmd_generate)

    pv = sub.add_parser("verify", help="run property suites; nonzero exit on violation")
    pv.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    pv.add_argument("--corpus", default=None, help="corpus directory (generated when empty)")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--count", type=int, default=400, help="instances per suite")
    pv.set_defaults(fn=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except CaRigidityError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
