"""Simple graphs, their neighborhood hypergraphs, proper interval / proper
circular-arc recognition, structural checks on arc orderings of closed
neighborhoods, and generators for the example families used throughout the
test corpus.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Any

import numpy as np

from .bitset import bits, default_labels, full_mask
from .enumeration import (
    Mode,
    count_arc_ordering_classes,
    default_cap,
    enumerate_arc_orderings,
    enumerate_interval_orderings,
)
from .errors import (
    NotAnArcOrderingError,
    PreconditionViolatedError,
    UniversalVertexError,
)
from .extension import solve_arc_ordering
from .hypergraph import EdgeRelation, Hypergraph, relation_components
from .orders import (
    ArcKind,
    CircularOrder,
    LinearOrder,
    arc_of,
    is_arc_ordering,
    is_tight_arc_ordering,
    is_tight_interval_ordering,
)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: symmetric irreflexive adjacency bitmask rows."""

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.adj) != n:
            raise ValueError("adjacency rows must match the vertex count")
        if len(set(self.labels)) != n:
            raise ValueError("vertex labels must be unique")
        full = full_mask(n)
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError("adjacency exceeds the vertex universe")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(row):
                if not (self.adj[u] >> v & 1):
                    raise ValueError("adjacency must be symmetric")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges,
        labels: tuple[str, ...] | None = None,
    ) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(labels=labels or default_labels(n), adj=tuple(adj))

    @classmethod
    def from_label_edges(cls, labels, edges) -> "Graph":
        labels = tuple(labels)
        idx = {lab: i for i, lab in enumerate(labels)}
        return cls.from_edges(
            len(labels), [(idx[u], idx[v]) for u, v in edges], labels=labels
        )

    @property
    def n(self) -> int:
        return len(self.labels)

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u]):
                if u < v:
                    out.append((u, v))
        return tuple(out)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def open_neighborhood(self, v: int) -> int:
        return self.adj[v]


def complement_graph(g: Graph) -> Graph:
    full = full_mask(g.n)
    return Graph(
        labels=g.labels,
        adj=tuple((full ^ g.adj[v]) & ~(1 << v) for v in range(g.n)),
    )


def is_connected(g: Graph) -> bool:
    seen = 1
    stack = [0]
    while stack:
        v = stack.pop()
        fresh = g.adj[v] & ~seen
        seen |= fresh
        stack.extend(bits(fresh))
    return seen == full_mask(g.n)


def universal_vertices(g: Graph) -> tuple[int, ...]:
    full = full_mask(g.n)
    return tuple(v for v in range(g.n) if g.closed_neighborhood(v) == full)


@dataclass(frozen=True)
class BipartitenessResult:
    is_bipartite: bool
    # 2-coloring when bipartite; an odd closed walk otherwise
    coloring: tuple[int, ...] | None
    odd_closed_walk: tuple[int, ...] | None


def is_bipartite(g: Graph) -> BipartitenessResult:
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    parent[u] = v
                    queue.append(u)
                elif color[u] == color[v]:
                    # walk both endpoints up to the root and splice the paths
                    path_v = [v]
                    while path_v[-1] != -1:
                        path_v.append(parent[path_v[-1]])
                    path_v.pop()
                    path_u = [u]
                    while path_u[-1] != -1:
                        path_u.append(parent[path_u[-1]])
                    path_u.pop()
                    set_v = {x: i for i, x in enumerate(path_v)}
                    meet = next(x for x in path_u if x in set_v)
                    iu = path_u.index(meet)
                    iv = set_v[meet]
                    walk = path_v[: iv + 1] + list(reversed(path_u[:iu]))
                    return BipartitenessResult(False, None, tuple(walk))
    return BipartitenessResult(True, tuple(color), None)


def graph_twin_classes(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Vertices with equal closed neighborhoods, grouped, in universe order."""
    sig: dict[int, list[int]] = {}
    for v in range(g.n):
        sig.setdefault(g.closed_neighborhood(v), []).append(v)
    classes = sorted(sig.values(), key=lambda c: c[0])
    return tuple(tuple(c) for c in classes)


def is_graph_twin_free(g: Graph) -> bool:
    return all(len(c) == 1 for c in graph_twin_classes(g))


# -- neighborhood hypergraphs ---------------------------------------------------


@dataclass(frozen=True)
class NeighborhoodHypergraph:
    """Deduplicated neighborhood hypergraph plus the vertex -> hyperedge-index
    map (twins collapse onto the same hyperedge)."""

    hypergraph: Hypergraph
    edge_index_of_vertex: tuple[int, ...]


def closed_neighborhood_hypergraph(g: Graph) -> NeighborhoodHypergraph:
    masks = [g.closed_neighborhood(v) for v in range(g.n)]
    h = Hypergraph(labels=g.labels, edges=tuple(masks))
    index = {e: i for i, e in enumerate(h.edges)}
    return NeighborhoodHypergraph(h, tuple(index[m] for m in masks))


def open_neighborhood_hypergraph(g: Graph) -> NeighborhoodHypergraph:
    masks = [g.open_neighborhood(v) for v in range(g.n)]
    h = Hypergraph(labels=g.labels, edges=tuple(masks))
    index = {e: i for i, e in enumerate(h.edges)}
    return NeighborhoodHypergraph(h, tuple(index[m] for m in masks))


# -- twin collapse used by the recognizers --------------------------------------


def _collapse_twins(g: Graph) -> tuple[Graph, tuple[tuple[int, ...], ...]]:
    classes = graph_twin_classes(g)
    reps = [c[0] for c in classes]
    pos = {r: i for i, r in enumerate(reps)}
    adj = [0] * len(reps)
    for i, r in enumerate(reps):
        for j, s in enumerate(reps):
            if i != j and g.has_edge(r, s):
                adj[i] |= 1 << j
    small = Graph(labels=tuple(g.labels[r] for r in reps), adj=tuple(adj))
    return small, classes


def _expand_order(seq_small, classes) -> tuple[int, ...]:
    # twin classes re-expand consecutively, ascending vertex index
    out: list[int] = []
    for i in seq_small:
        out.extend(classes[i])
    return tuple(out)


@dataclass(frozen=True)
class RecognitionResult:
    is_member: bool
    tight_order: CircularOrder | LinearOrder | None


def recognize_pca(g: Graph, cap: int | None = None) -> RecognitionResult:
    """Proper circular-arc recognition through the closed neighborhood
    hypergraph: the graph is PCA exactly when that hypergraph has a tight arc
    ordering.  Twins are collapsed for solving and re-expanded consecutively."""
    small, classes = _collapse_twins(g)
    nh = closed_neighborhood_hypergraph(small).hypergraph
    full_nh = closed_neighborhood_hypergraph(g).hypergraph

    order_small = solve_arc_ordering(nh, cap=cap)
    if order_small is not None and is_tight_arc_ordering(nh, order_small):
        order = CircularOrder(_expand_order(order_small.seq, classes))
        if is_tight_arc_ordering(full_nh, order):
            return RecognitionResult(True, order)
    # a non-tight ordering does not refute membership; fall back to the oracle
    tight = enumerate_arc_orderings(nh, Mode.TIGHT_ONLY, cap)
    if not tight:
        return RecognitionResult(False, None)
    order = CircularOrder(_expand_order(tight[0].seq, classes))
    if not is_tight_arc_ordering(full_nh, order):
        raise AssertionError("twin expansion broke tightness; this is a bug")
    return RecognitionResult(True, order)


def recognize_proper_interval(g: Graph, cap: int | None = None) -> RecognitionResult:
    """Proper interval recognition: the closed neighborhood hypergraph must be
    an interval hypergraph, in which case a tight interval ordering exists."""
    small, classes = _collapse_twins(g)
    nh = closed_neighborhood_hypergraph(small).hypergraph
    tight = enumerate_interval_orderings(nh, Mode.TIGHT_ONLY, cap)
    if not tight:
        return RecognitionResult(False, None)
    order = LinearOrder(_expand_order(tight[0].seq, classes))
    full_nh = closed_neighborhood_hypergraph(g).hypergraph
    if not is_tight_interval_ordering(full_nh, order):
        raise AssertionError("twin expansion broke tightness; this is a bug")
    return RecognitionResult(True, order)


# -- per-vertex arc endpoints and the structural checks -------------------------


@dataclass(frozen=True)
class NeighborhoodArcs:
    """Per-vertex endpoints (v-, v+) of the closed neighborhood arcs under one
    arc ordering; defined only when no universal vertex exists."""

    order: CircularOrder
    endpoints: tuple[tuple[int, int], ...]

    def __getitem__(self, v: int) -> tuple[int, int]:
        return self.endpoints[v]

    def items(self):
        return enumerate(self.endpoints)


def neighborhood_arcs(g: Graph, order: CircularOrder) -> NeighborhoodArcs:
    if universal_vertices(g):
        raise UniversalVertexError("arc endpoints are undefined for universal vertices")
    nh = closed_neighborhood_hypergraph(g).hypergraph
    if not is_arc_ordering(nh, order):
        raise NotAnArcOrderingError("order is not an arc ordering of the neighborhoods")
    out = []
    for v in range(g.n):
        arc = arc_of(g.closed_neighborhood(v), order)
        if arc is None or arc.kind is not ArcKind.NORMAL:
            raise NotAnArcOrderingError("order is not an arc ordering of the neighborhoods")
        out.append((arc.start, arc.end))
    return NeighborhoodArcs(order=order, endpoints=tuple(out))


def _circular_slice(order: CircularOrder, a: int, b: int) -> tuple[int, ...]:
    """Vertices from a to b inclusive, walking clockwise."""
    n = order.n
    pa, pb = order.pos[a], order.pos[b]
    length = (pb - pa) % n + 1
    return tuple(order.seq[(pa + i) % n] for i in range(length))


def _is_clique(g: Graph, verts) -> bool:
    verts = list(verts)
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            if not g.has_edge(u, v):
                return False
    return True


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    holds: bool
    counterexample: dict[str, Any] | None = None


@dataclass(frozen=True)
class StructuralLemmaReport:
    checks: tuple[LemmaCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "all_hold": self.all_hold,
            "checks": [
                {"name": c.name, "holds": c.holds, "counterexample": c.counterexample}
                for c in self.checks
            ],
        }


def check_structural_lemmas(g: Graph, order: CircularOrder) -> StructuralLemmaReport:
    """Verify, under an arc ordering of the closed neighborhoods of a graph
    whose complement is non-bipartite: (i) every vertex splits its
    neighborhood arc into two cliques, (ii) the ordering is tight, and
    (iii) the endpoint pattern of ordered adjacent pairs follows the one
    admissible circular sequence."""
    comp = complement_graph(g)
    bip = is_bipartite(comp)
    if bip.is_bipartite:
        raise PreconditionViolatedError(
            "complement is non-bipartite", "the checks presume a non-bipartite complement"
        )
    nh = closed_neighborhood_hypergraph(g).hypergraph
    if not is_arc_ordering(nh, order):
        raise NotAnArcOrderingError("order is not an arc ordering of the neighborhoods")
    ends = neighborhood_arcs(g, order)

    checks: list[LemmaCheck] = []

    two_cliques = LemmaCheck("vertex-splits-neighborhood-into-two-cliques", True)
    for u in range(g.n):
        um, up = ends[u]
        left = _circular_slice(order, um, u)
        right = _circular_slice(order, u, up)
        if not _is_clique(g, left) or not _is_clique(g, right):
            two_cliques = LemmaCheck(
                two_cliques.name, False, {"vertex": u, "arc": [um, up]}
            )
            break
    checks.append(two_cliques)

    tight = LemmaCheck("every-arc-ordering-is-tight", is_tight_arc_ordering(nh, order))
    checks.append(tight)

    part1 = LemmaCheck("clockwise-membership-symmetry", True)
    for u in range(g.n):
        for v in range(g.n):
            if u == v:
                continue
            um, up = ends[u]
            vm, vp = ends[v]
            in_u_plus = v in _circular_slice(order, u, up)
            in_v_minus = u in _circular_slice(order, vm, v)
            if in_u_plus != in_v_minus:
                part1 = LemmaCheck(part1.name, False, {"u": u, "v": v})
                break
        if not part1.holds:
            break
    checks.append(part1)

    part2 = LemmaCheck("clockwise-membership-endpoint-containment", True)
    for u in range(g.n):
        for v in range(g.n):
            if u == v:
                continue
            um, up = ends[u]
            vm, vp = ends[v]
            if v in _circular_slice(order, u, up):
                ok = vm in _circular_slice(order, um, u) and up in _circular_slice(
                    order, v, vp
                )
                if not ok:
                    part2 = LemmaCheck(part2.name, False, {"u": u, "v": v})
                    break
        if not part2.holds:
            break
    checks.append(part2)

    part3 = LemmaCheck("adjacent-successors-endpoint-sequence", True)
    n = g.n
    for p in range(n):
        u = order.seq[p]
        v = order.seq[(p + 1) % n]
        if not g.has_edge(u, v):
            continue
        um, up = ends[u]
        vm, vp = ends[v]
        base = order.pos[um]
        offsets = [(order.pos[x] - base) % n for x in (um, vm, u, v, up, vp)]
        monotone = all(offsets[i] <= offsets[i + 1] for i in range(5))
        distinct_ends = offsets[5] != 0  # v+ may not coincide with u-
        not_immediate = offsets[5] != n - 1  # v+ may not immediately precede u-
        if not (monotone and distinct_ends and not_immediate):
            part3 = LemmaCheck(
                part3.name, False, {"u": u, "v": v, "offsets": offsets}
            )
            break
    checks.append(part3)

    return StructuralLemmaReport(tuple(checks))


def strict_connectedness_of_neighborhoods(g: Graph) -> bool:
    nh = closed_neighborhood_hypergraph(g).hypergraph
    return relation_components(nh, EdgeRelation.STRICT_INTERSECT).is_connected


def theorem_ovconn_check(g: Graph, cap: int | None = None) -> bool:
    """After dropping the hyperedges of size n-1 from the closed neighborhood
    hypergraph of a twin-free, connected, non-co-bipartite PCA graph, the rest
    must be twin-free and strictly overlap-connected."""
    if not is_graph_twin_free(g):
        raise PreconditionViolatedError("graph is twin-free")
    if not is_connected(g):
        raise PreconditionViolatedError("graph is connected")
    if is_bipartite(complement_graph(g)).is_bipartite:
        raise PreconditionViolatedError("complement is non-bipartite")
    if not recognize_pca(g, cap=cap).is_member:
        raise PreconditionViolatedError("graph is proper circular-arc")
    nh = closed_neighborhood_hypergraph(g).hypergraph
    n = g.n
    kept = tuple(e for e in nh.edges if e.bit_count() != n - 1)
    core = Hypergraph(labels=nh.labels, edges=kept)
    from .hypergraph import is_twin_free as h_twin_free

    return h_twin_free(core) and relation_components(
        core, EdgeRelation.STRICT_OVERLAP
    ).is_connected


# -- rigidity of neighborhood hypergraphs per graph class -----------------------


class NrigidCase(enum.Enum):
    NON_BIPARTITE_COMPLEMENT = "non-bipartite-complement"
    BIPARTITE_CONNECTED_COMPLEMENT = "bipartite-connected-complement"
    OTHER = "other"
    SMALL_INSTANCE = "small-instance"


@dataclass(frozen=True)
class NrigidVerdict:
    case: NrigidCase
    all_classes: int | None
    tight_classes: int | None
    tight_orders: tuple[CircularOrder, ...]
    oracle_all: int | None = None
    oracle_tight: int | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "case": self.case.value,
            "all_classes": self.all_classes,
            "tight_classes": self.tight_classes,
            "tight_orders": [list(o.seq) for o in self.tight_orders],
            "oracle_all_classes": self.oracle_all,
            "oracle_tight_classes": self.oracle_tight,
        }


def _merge_component_orders(g: Graph, comp: Graph, coloring) -> tuple[CircularOrder, ...]:
    """The two tight arc orderings of the closed neighborhoods of a PCA graph
    whose complement is bipartite and connected: order each side by the unique
    tight interval ordering of its open-complement-neighborhood component and
    merge the two segments onto the circle both ways."""
    side_u = [v for v in range(g.n) if coloring[v] == 0]
    side_w = [v for v in range(g.n) if coloring[v] == 1]

    def component_order(side: list[int], other: list[int]) -> list[int]:
        index = {v: i for i, v in enumerate(side)}
        edges = []
        for w in other:
            mask = 0
            for v in bits(comp.adj[w]):
                mask |= 1 << index[v]
            if mask:
                edges.append(mask)
        sub = Hypergraph(
            labels=tuple(g.labels[v] for v in side), edges=tuple(set(edges))
        )
        tight = enumerate_interval_orderings(sub, Mode.TIGHT_ONLY)
        if len(tight) != 1:
            raise AssertionError(
                f"expected a unique tight interval ordering per side, got {len(tight)}"
            )
        return [side[i] for i in tight[0].seq]

    ord_u = component_order(side_u, side_w)
    ord_w = component_order(side_w, side_u)
    nh = closed_neighborhood_hypergraph(g).hypergraph
    candidates = [
        CircularOrder(tuple(ord_u + ord_w)),
        CircularOrder(tuple(ord_u + list(reversed(ord_w)))),
    ]
    good = tuple(o for o in candidates if is_tight_arc_ordering(nh, o))
    if len(good) != 2:
        raise AssertionError("component merge did not produce two tight orderings")
    return good


def nrigid_verdict(g: Graph, cap: int | None = None) -> NrigidVerdict:
    """Ordering-multiplicity of the closed neighborhood hypergraph for a
    twin-free connected PCA graph, split by the structure of the complement.
    Graphs on up to three vertices short-circuit: all of their arc orderings
    coincide up to rotation and reversal."""
    if not is_connected(g):
        raise PreconditionViolatedError("graph is connected")
    nh = closed_neighborhood_hypergraph(g).hypergraph
    effective = default_cap(circular=True) if cap is None else cap
    oracle_all = oracle_tight = None
    if g.n <= effective:
        oracle_all = count_arc_ordering_classes(nh, Mode.ALL, effective)
        oracle_tight = count_arc_ordering_classes(nh, Mode.TIGHT_ONLY, effective)
    if g.n <= 3:
        return NrigidVerdict(
            NrigidCase.SMALL_INSTANCE, None, None, (), oracle_all, oracle_tight
        )
    if not is_graph_twin_free(g):
        raise PreconditionViolatedError("graph is twin-free")
    if not recognize_pca(g, cap=cap).is_member:
        raise PreconditionViolatedError("graph is proper circular-arc")
    comp = complement_graph(g)
    bip = is_bipartite(comp)
    if not bip.is_bipartite:
        order = solve_arc_ordering(nh, cap=cap)
        return NrigidVerdict(
            NrigidCase.NON_BIPARTITE_COMPLEMENT,
            1,
            1,
            (order,) if order is not None else (),
            oracle_all,
            oracle_tight,
        )
    if is_connected(comp):
        orders = _merge_component_orders(g, comp, bip.coloring)
        return NrigidVerdict(
            NrigidCase.BIPARTITE_CONNECTED_COMPLEMENT,
            None,
            2,
            orders,
            oracle_all,
            oracle_tight,
        )
    return NrigidVerdict(NrigidCase.OTHER, None, None, (), oracle_all, oracle_tight)


# -- generators -----------------------------------------------------------------


def gen_half_graph(m: int) -> Graph:
    """Bipartite graph on u_1..u_m, v_1..v_m with u_i ~ v_j iff i <= j."""
    if m < 1:
        raise ValueError("m must be positive")
    labels = tuple(f"u{i + 1}" for i in range(m)) + tuple(f"v{j + 1}" for j in range(m))
    edges = [(i, m + j) for i in range(m) for j in range(m) if i <= j]
    return Graph.from_edges(2 * m, edges, labels=labels)


def gen_half_graph_complement(m: int) -> Graph:
    return complement_graph(gen_half_graph(m))


def gen_fig_example() -> Graph:
    """The six-vertex example graph whose closed neighborhoods are strictly
    overlap-connected only after the one large hyperedge is removed."""
    labels = ("a", "b", "c", "x", "y", "z")
    edges = [
        ("a", "b"),
        ("a", "c"),
        ("b", "c"),
        ("c", "x"),
        ("x", "y"),
        ("a", "y"),
        ("a", "z"),
        ("y", "z"),
    ]
    return Graph.from_label_edges(labels, edges)


def gen_gk(k: int):
    """Family with many degree-(n-2) vertices: the graph on 3k-1 vertices
    u_1..u_k, v_1..v_k, w_1..w_{k-1} that is complete except for the
    non-adjacent pairs v_i u_i, w_i u_i, w_i u_{i+1} and u_1 u_k, together
    with a sharp proper arc model realizing it.

    Returns (graph, model, circular_order); the order lists the vertices as
    they appear around the model's circle.
    """
    from .models import reconstruct_arc

    if k < 2:
        raise ValueError("k must be at least 2")
    n = 3 * k - 1
    u = {i: i - 1 for i in range(1, k + 1)}
    labels = [f"u{i}" for i in range(1, k + 1)]
    order_tail: list[int] = []
    v: dict[int, int] = {}
    w: dict[int, int] = {}
    nxt = k
    for i in range(1, k + 1):
        v[i] = nxt
        labels.append(f"v{i}")
        order_tail.append(nxt)
        nxt += 1
        if i <= k - 1:
            w[i] = nxt
            labels.append(f"w{i}")
            order_tail.append(nxt)
            nxt += 1
    non_edges = {(u[1], u[k])}
    for i in range(1, k + 1):
        non_edges.add((v[i], u[i]))
    for i in range(1, k):
        non_edges.add((w[i], u[i]))
        non_edges.add((w[i], u[i + 1]))
    edges = [
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if (a, b) not in non_edges and (b, a) not in non_edges
    ]
    graph = Graph.from_edges(n, edges, labels=tuple(labels))
    order = CircularOrder(tuple(u[i] for i in range(1, k + 1)) + tuple(order_tail))
    model = reconstruct_arc(graph, order)
    return graph, model, order


def gen_random_pca(
    n: int, density: float, seed: int, twin_free: bool = False, max_tries: int = 2000
):
    """Reproducible random PCA instance: sample a sharp proper arc model and
    take its intersection graph.  Returns (graph, model)."""
    from .models import model_to_graph, random_sharp_arc_model

    if n < 2:
        raise ValueError("n must be at least 2")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        model = random_sharp_arc_model(rng, n, density)
        graph = model_to_graph(model)
        if twin_free and not is_graph_twin_free(graph):
            continue
        return graph, model
    raise RuntimeError(f"no admissible instance found in {max_tries} tries")
