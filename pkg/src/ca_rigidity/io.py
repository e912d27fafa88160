"""Line-oriented text formats for the five document kinds, plus DOT export.

All formats share the conventions: one record per line, `#` starts a comment,
blank lines are ignored.  Emit followed by parse is the identity on every
document kind.
"""

from __future__ import annotations

from .errors import ParseError
from .graphs import Graph
from .hypergraph import Hypergraph
from .models import Orientation, SharpArcModel, SharpIntervalModel
from .orders import CircularOrder, LinearOrder


def _records(text: str):
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield ln, line


def _split_directive(ln: int, line: str) -> tuple[str, list[str]]:
    if ":" in line:
        head, rest = line.split(":", 1)
        return head.strip(), rest.split()
    parts = line.split()
    return parts[0], parts[1:]


# -- hypergraph -------------------------------------------------------------


def parse_hypergraph(text: str) -> tuple[Hypergraph, int]:
    """Returns the hypergraph and the number of duplicate hyperedges dropped."""
    labels: list[str] | None = None
    edge_sets: list[list[str]] = []
    for ln, line in _records(text):
        head, rest = _split_directive(ln, line)
        if head == "vertices":
            if labels is not None:
                raise ParseError("duplicate vertices line", ln)
            if not rest:
                raise ParseError("vertices line needs at least one label", ln)
            if len(set(rest)) != len(rest):
                raise ParseError("vertex labels must be unique", ln)
            labels = rest
        elif head == "edge":
            if labels is None:
                raise ParseError("edge line before vertices line", ln)
            for name in rest:
                if name not in labels:
                    raise ParseError(f"unknown vertex {name!r}", ln, line.index(name) + 1)
            edge_sets.append(rest)
        else:
            raise ParseError(f"unknown directive {head!r}", ln)
    if labels is None:
        raise ParseError("missing vertices line", 1)
    h = Hypergraph.from_label_sets(labels, edge_sets)
    masks = [h.mask_from_labels(s) for s in edge_sets]
    return h, len(masks) - len(set(masks))


def emit_hypergraph(h: Hypergraph) -> str:
    lines = ["vertices: " + " ".join(h.labels)]
    for e in h.edges:
        lines.append("edge: " + " ".join(h.edge_labels(e)))
    return "\n".join(lines) + "\n"


# -- graph -------------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    labels: list[str] | None = None
    edges: list[tuple[str, str]] = []
    for ln, line in _records(text):
        head, rest = _split_directive(ln, line)
        if head == "vertices":
            if labels is not None:
                raise ParseError("duplicate vertices line", ln)
            if len(set(rest)) != len(rest):
                raise ParseError("vertex labels must be unique", ln)
            labels = rest
        elif head == "edge":
            if labels is None:
                raise ParseError("edge line before vertices line", ln)
            if len(rest) != 2:
                raise ParseError("graph edges join exactly two vertices", ln)
            u, v = rest
            for name in (u, v):
                if name not in labels:
                    raise ParseError(f"unknown vertex {name!r}", ln, line.index(name) + 1)
            if u == v:
                raise ParseError("loops are not allowed", ln)
            edges.append((u, v))
        else:
            raise ParseError(f"unknown directive {head!r}", ln)
    if labels is None:
        raise ParseError("missing vertices line", 1)
    return Graph.from_label_edges(labels, edges)


def emit_graph(g: Graph) -> str:
    lines = ["vertices: " + " ".join(g.labels)]
    for u, v in g.edges():
        lines.append(f"edge: {g.labels[u]} {g.labels[v]}")
    return "\n".join(lines) + "\n"


# -- model -------------------------------------------------------------------


def parse_model(
    text: str,
) -> tuple[SharpArcModel | SharpIntervalModel, tuple[str, ...]]:
    """Returns the model and the vertex labels in index order."""
    n: int | None = None
    rows: list[tuple[str, str, int, int]] = []
    for ln, line in _records(text):
        head, rest = _split_directive(ln, line)
        if head == "n":
            if n is not None:
                raise ParseError("duplicate n line", ln)
            try:
                n = int(rest[0])
            except (IndexError, ValueError):
                raise ParseError("n line needs an integer", ln) from None
        elif head in ("arc", "interval"):
            if len(rest) != 3:
                raise ParseError(f"{head} line needs: label start end", ln)
            try:
                a, b = int(rest[1]), int(rest[2])
            except ValueError:
                raise ParseError("endpoints must be integers", ln) from None
            rows.append((head, rest[0], a, b))
        else:
            raise ParseError(f"unknown directive {head!r}", ln)
    if n is None:
        raise ParseError("missing n line", 1)
    if len(rows) != n:
        raise ParseError(f"expected {n} arc/interval lines, found {len(rows)}", 1)
    kinds = {k for k, *_ in rows}
    if len(kinds) != 1:
        raise ParseError("cannot mix arc and interval lines", 1)
    labels = tuple(lab for _, lab, _, _ in rows)
    if len(set(labels)) != len(labels):
        raise ParseError("vertex labels must be unique", 1)
    pairs = tuple((a, b) for _, _, a, b in rows)
    from .errors import MalformedModelError

    try:
        if kinds == {"arc"}:
            return SharpArcModel(n=n, arcs=pairs), labels
        return SharpIntervalModel(n=n, intervals=pairs), labels
    except MalformedModelError as exc:
        raise ParseError(str(exc), 1) from exc


def emit_model(
    model: SharpArcModel | SharpIntervalModel, labels: tuple[str, ...] | None = None
) -> str:
    from .bitset import default_labels

    labels = labels or default_labels(model.n)
    kind = "arc" if isinstance(model, SharpArcModel) else "interval"
    pairs = model.arcs if isinstance(model, SharpArcModel) else model.intervals
    lines = [f"n: {model.n}"]
    for v, (a, b) in enumerate(pairs):
        lines.append(f"{kind} {labels[v]} {a} {b}")
    return "\n".join(lines) + "\n"


# -- order -------------------------------------------------------------------


def parse_order(
    text: str, labels: tuple[str, ...] | None = None
) -> tuple[CircularOrder | LinearOrder, tuple[str, ...]]:
    """Orders are written over labels; when a label universe is supplied the
    sequence is mapped into it, otherwise the line defines its own universe."""
    found = None
    for ln, line in _records(text):
        head, rest = _split_directive(ln, line)
        if head not in ("circular", "linear"):
            raise ParseError(f"unknown directive {head!r}", ln)
        if found is not None:
            raise ParseError("multiple order lines", ln)
        if len(set(rest)) != len(rest):
            raise ParseError("order must not repeat vertices", ln)
        found = (ln, head, rest)
    if found is None:
        raise ParseError("missing order line", 1)
    ln, head, names = found
    if labels is None:
        labels = tuple(sorted(names))
    index = {lab: i for i, lab in enumerate(labels)}
    try:
        seq = tuple(index[name] for name in names)
    except KeyError as exc:
        raise ParseError(f"unknown vertex {exc.args[0]!r}", ln) from None
    if len(seq) != len(labels):
        raise ParseError("order must mention every vertex exactly once", ln)
    order = CircularOrder(seq) if head == "circular" else LinearOrder(seq)
    return order, labels


def emit_order(order: CircularOrder | LinearOrder, labels: tuple[str, ...]) -> str:
    head = "circular" if isinstance(order, CircularOrder) else "linear"
    return f"{head}: " + " ".join(labels[v] for v in order.seq) + "\n"


# -- orientation ---------------------------------------------------------------


def parse_orientation(text: str) -> Orientation:
    graph_lines = []
    dir_lines = []
    for ln, line in _records(text):
        head, _ = _split_directive(ln, line)
        if head == "dir":
            dir_lines.append((ln, line))
        else:
            graph_lines.append(line)
    g = parse_graph("\n".join(graph_lines))
    idx = {lab: i for i, lab in enumerate(g.labels)}
    directed = set()
    for ln, line in dir_lines:
        _, rest = _split_directive(ln, line)
        if len(rest) != 2:
            raise ParseError("dir line needs exactly two vertices", ln)
        u, v = rest
        if u not in idx or v not in idx:
            raise ParseError("dir line names an unknown vertex", ln)
        directed.add((idx[u], idx[v]))
    try:
        return Orientation(g, frozenset(directed))
    except ValueError as exc:
        raise ParseError(str(exc), 1) from exc


def emit_orientation(o: Orientation) -> str:
    lines = [emit_graph(o.graph).rstrip("\n")]
    labels = o.graph.labels
    for u, v in sorted(o.directed):
        lines.append(f"dir: {labels[u]} {labels[v]}")
    return "\n".join(lines) + "\n"


# -- DOT ------------------------------------------------------------------------


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for lab in g.labels:
        lines.append(f'  "{lab}";')
    for u, v in g.edges():
        lines.append(f'  "{g.labels[u]}" -- "{g.labels[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def orientation_to_dot(o: Orientation, name: str = "D") -> str:
    labels = o.graph.labels
    lines = [f"digraph {name} {{"]
    for lab in labels:
        lines.append(f'  "{lab}";')
    for u, v in sorted(o.directed):
        lines.append(f'  "{labels[u]}" -> "{labels[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
