"""Sharp proper intersection models on 2n points, geometric orders,
reconstruction of models from orders, symmetry equivalence, and round/straight
orientations.

All points are 1-based on the circle C_2n (or the segment {1..2n}), matching
the convention that a sharp model of an n-vertex graph uses every point as an
endpoint exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitset import full_mask
from .errors import (
    AmbiguousDirectionError,
    MalformedModelError,
    NotAnArcOrderingError,
    NotAnIntervalOrderingError,
    NotRealizableError,
    TooLargeError,
    TooManyUniversalVerticesError,
    UniversalVertexError,
)
from .graphs import Graph, closed_neighborhood_hypergraph, universal_vertices
from .orders import (
    ArcKind,
    CircularOrder,
    LinearOrder,
    arc_of,
    interval_of,
    is_arc_ordering,
    is_interval_ordering,
)


def _arc_point_mask(a: int, b: int, m: int) -> int:
    """Mask of the 0-based points from a to b clockwise, inclusive (1-based in)."""
    a0, b0 = a - 1, b - 1
    size = (b0 - a0) % m + 1
    if size == m:
        return full_mask(m)
    return ((1 << size) - 1 << a0) % ((1 << m) - 1)


def _interval_point_mask(a: int, b: int) -> int:
    return ((1 << (b - a + 1)) - 1) << (a - 1)


@dataclass(frozen=True)
class SharpArcModel:
    """Per-vertex arcs [a_i, b_i] on C_2n; every point of the circle is an
    endpoint of exactly one arc side."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        m = 2 * self.n
        if len(self.arcs) != self.n or self.n < 1:
            raise MalformedModelError("model must give one arc per vertex")
        seen = set()
        for a, b in self.arcs:
            if not (1 <= a <= m and 1 <= b <= m):
                raise MalformedModelError(f"endpoint outside C_{m}")
            seen.add(a)
            seen.add(b)
        if len(seen) != m:
            raise MalformedModelError(
                "endpoints must be pairwise distinct and leave no inner point"
            )

    @property
    def m(self) -> int:
        return 2 * self.n

    def point_masks(self) -> tuple[int, ...]:
        return tuple(_arc_point_mask(a, b, self.m) for a, b in self.arcs)


@dataclass(frozen=True)
class SharpIntervalModel:
    """Per-vertex intervals [a_i, b_i] with a_i < b_i on the segment {1..2n}."""

    n: int
    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self):
        m = 2 * self.n
        if len(self.intervals) != self.n or self.n < 1:
            raise MalformedModelError("model must give one interval per vertex")
        seen = set()
        for a, b in self.intervals:
            if not (1 <= a < b <= m):
                raise MalformedModelError("interval endpoints must satisfy 1 <= a < b <= 2n")
            seen.add(a)
            seen.add(b)
        if len(seen) != m:
            raise MalformedModelError(
                "endpoints must be pairwise distinct and leave no inner point"
            )

    @property
    def m(self) -> int:
        return 2 * self.n

    def point_masks(self) -> tuple[int, ...]:
        return tuple(_interval_point_mask(a, b) for a, b in self.intervals)


Model = SharpArcModel | SharpIntervalModel


def model_to_graph(model: Model, labels: tuple[str, ...] | None = None) -> Graph:
    """Intersection graph: vertices adjacent exactly when their arcs meet."""
    masks = model.point_masks()
    n = model.n
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if masks[i] & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    from .bitset import default_labels

    return Graph(labels=labels or default_labels(n), adj=tuple(adj))


def is_proper(model: Model) -> bool:
    """No arc/interval of the model contains another."""
    masks = model.point_masks()
    for i in range(model.n):
        for j in range(model.n):
            if i != j and masks[i] & ~masks[j] == 0:
                return False
    return True


def geometric_order(model: Model) -> CircularOrder | LinearOrder:
    """Vertices in order of appearance of the left endpoints."""
    if isinstance(model, SharpArcModel):
        seq = tuple(v for _, v in sorted((a, i) for i, (a, b) in enumerate(model.arcs)))
        return CircularOrder(seq)
    seq = tuple(v for _, v in sorted((a, i) for i, (a, b) in enumerate(model.intervals)))
    return LinearOrder(seq)


# -- reconstruction from geometric orders ---------------------------------------


def reconstruct_interval(g: Graph, order: LinearOrder) -> SharpIntervalModel:
    """The unique sharp proper interval model whose geometric order is the
    given one: the i-th left endpoint is i plus the number of earlier
    non-neighbors, and each right endpoint follows the left one by one plus
    the vertex degree.  Verified post hoc; non-geometric orders raise."""
    if g.n != order.n:
        raise NotRealizableError("order and graph disagree on the vertex count")
    n = g.n
    verts = order.seq
    a = [0] * n
    b = [0] * n
    for i in range(n):
        vi = verts[i]
        before = sum(
            1 for j in range(i) if not (g.has_edge(verts[j], vi) or verts[j] == vi)
        )
        a[i] = (i + 1) + before
        b[i] = a[i] + 1 + g.degree(vi)
    intervals = [(0, 0)] * n
    for i in range(n):
        intervals[verts[i]] = (a[i], b[i])
    try:
        model = SharpIntervalModel(n=n, intervals=tuple(intervals))
    except MalformedModelError as exc:
        raise NotRealizableError(f"order is not geometric for the graph: {exc}") from exc
    if model_to_graph(model).adj != g.adj:
        raise NotRealizableError("reconstructed model realizes a different graph")
    if geometric_order(model).seq != order.seq:
        raise NotRealizableError("reconstructed model has a different geometric order")
    return model


def _closed_run(g: Graph, order: CircularOrder, i: int, step: int) -> set[int]:
    """Closed one-sided neighborhood of the i-th vertex: walk from it in the
    given direction while vertices stay adjacent."""
    n = order.n
    vi = order.seq[i]
    out = {vi}
    j = (i + step) % n
    while j != i and g.has_edge(order.seq[j], vi):
        out.add(order.seq[j])
        j = (j + step) % n
    return out


def _one_sided_neighborhoods(
    g: Graph, order: CircularOrder
) -> tuple[list[set[int]], list[set[int]]]:
    """Clockwise and counter-clockwise closed neighborhoods per position.

    For a non-universal vertex these are the two halves of its neighborhood
    arc.  The walk around the circle is meaningless for a universal vertex, so
    its split is recovered from everyone else's: strictly overlapping arcs
    contain exactly one endpoint of each other, hence w lies clockwise of u
    exactly when u lies counter-clockwise of w."""
    n = order.n
    universal = set(universal_vertices(g))
    nplus = [_closed_run(g, order, i, +1) for i in range(n)]
    nminus = [_closed_run(g, order, i, -1) for i in range(n)]
    for i in range(n):
        u = order.seq[i]
        if u not in universal:
            continue
        plus = {u}
        minus = {u}
        for j in range(n):
            w = order.seq[j]
            if w == u:
                continue
            if u in nminus[j]:
                plus.add(w)
            if u in nplus[j]:
                minus.add(w)
        nplus[i] = plus
        nminus[i] = minus
    return nplus, nminus


def reconstruct_arc(g: Graph, order: CircularOrder) -> SharpArcModel:
    """The unique-up-to-rotation sharp proper arc model with the given
    geometric order, normalized so the first vertex starts at point 1.

    Left endpoints come from counting, between point 1 and the target, the
    start points of preceding vertices and the end points of vertices whose
    arcs have already closed; the two counting cases split on whether the
    vertex lies in the clockwise closed neighborhood of the first one.
    Verified post hoc; requires at most one universal vertex."""
    if g.n != order.n:
        raise NotRealizableError("order and graph disagree on the vertex count")
    if len(universal_vertices(g)) > 1:
        raise TooManyUniversalVerticesError(
            "arc reconstruction requires at most one universal vertex"
        )
    n = g.n
    m = 2 * n
    verts = order.seq
    nplus, nminus = _one_sided_neighborhoods(g, order)
    a = [0] * n
    b = [0] * n
    a[0] = 1
    v1 = verts[0]
    deg1 = g.degree(v1)
    for i in range(1, n):
        vi = verts[i]
        if vi not in nplus[0]:
            later_outside = sum(1 for j in range(1, i + 1) if verts[j] not in nplus[0])
            closed_before = sum(1 for j in range(1, i) if verts[j] not in nminus[i])
            a[i] = 2 + deg1 + later_outside + closed_before
        else:
            a[i] = (i + 1) + len(nminus[0] - nminus[i])
        a[i] = (a[i] - 1) % m + 1
    for i in range(n):
        b[i] = (a[i] + 1 + g.degree(verts[i]) - 1) % m + 1
    arcs = [(0, 0)] * n
    for i in range(n):
        arcs[verts[i]] = (a[i], b[i])
    try:
        model = SharpArcModel(n=n, arcs=tuple(arcs))
    except MalformedModelError as exc:
        raise NotRealizableError(f"order is not geometric for the graph: {exc}") from exc
    if model_to_graph(model).adj != g.adj:
        raise NotRealizableError("reconstructed model realizes a different graph")
    if geometric_order(model).seq != order.seq:
        raise NotRealizableError("reconstructed model has a different geometric order")
    return model


def reconstruct_arc_from_graph(
    g: Graph, cap: int | None = None
) -> tuple[SharpArcModel, CircularOrder]:
    """Sharp proper arc model of a proper circular-arc graph, found through a
    geometric ordering of its closed neighborhoods.

    The recognizer's tight ordering is tried first; not every tight ordering
    is geometric (co-bipartite instances have a non-geometric tight class), so
    the enumerated classes are scanned as a fallback."""
    from .enumeration import Mode, enumerate_arc_orderings
    from .graphs import recognize_pca

    res = recognize_pca(g, cap=cap)
    if not res.is_member:
        raise NotRealizableError("graph is not proper circular-arc")
    candidates = [res.tight_order, res.tight_order.reversed()]
    try:
        nh = closed_neighborhood_hypergraph(g).hypergraph
        for rep in enumerate_arc_orderings(nh, Mode.TIGHT_ONLY, cap):
            candidates.extend((rep, rep.reversed()))
    except TooLargeError:
        pass  # beyond the cap the recognizer's order must do
    for order in candidates:
        try:
            return reconstruct_arc(g, order), order
        except NotRealizableError:
            continue
    raise NotRealizableError("no enumerated tight ordering is geometric")


# -- symmetry -------------------------------------------------------------------


def _rotate_point(p: int, shift: int, m: int) -> int:
    return (p - 1 + shift) % m + 1


def _reflect_point(p: int, m: int) -> int:
    return m + 1 - p


def models_equal_up_to_symmetry(
    m1: Model, m2: Model, allow_reflection: bool = True
) -> bool:
    """Whether a circle rotation (and optionally a reflection) carries the
    first model onto the second, vertex by vertex.  Interval models admit only
    the reflection."""
    if type(m1) is not type(m2) or m1.n != m2.n:
        return False
    m = m1.m
    if isinstance(m1, SharpIntervalModel):
        if m1.intervals == m2.intervals:
            return True
        if not allow_reflection:
            return False
        reflected = tuple(
            (_reflect_point(b, m), _reflect_point(a, m)) for a, b in m1.intervals
        )
        return reflected == m2.intervals
    arcs2 = m2.arcs
    for shift in range(m):
        rotated = tuple(
            (_rotate_point(a, shift, m), _rotate_point(b, shift, m)) for a, b in m1.arcs
        )
        if rotated == arcs2:
            return True
    if allow_reflection:
        mirrored = tuple(
            (_reflect_point(b, m), _reflect_point(a, m)) for a, b in m1.arcs
        )
        for shift in range(m):
            rotated = tuple(
                (_rotate_point(a, shift, m), _rotate_point(b, shift, m)) for a, b in mirrored
            )
            if rotated == arcs2:
                return True
    return False


def rotate_model(model: SharpArcModel, shift: int) -> SharpArcModel:
    m = model.m
    return SharpArcModel(
        n=model.n,
        arcs=tuple(
            (_rotate_point(a, shift, m), _rotate_point(b, shift, m)) for a, b in model.arcs
        ),
    )


def reflect_model(model: Model) -> Model:
    m = model.m
    if isinstance(model, SharpArcModel):
        return SharpArcModel(
            n=model.n,
            arcs=tuple((_reflect_point(b, m), _reflect_point(a, m)) for a, b in model.arcs),
        )
    return SharpIntervalModel(
        n=model.n,
        intervals=tuple(
            (_reflect_point(b, m), _reflect_point(a, m)) for a, b in model.intervals
        ),
    )


# -- orientations ----------------------------------------------------------------


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge of the base graph."""

    graph: Graph
    directed: frozenset[tuple[int, int]]

    def __post_init__(self):
        seen = set()
        for u, v in self.directed:
            if not self.graph.has_edge(u, v):
                raise ValueError(f"({u},{v}) is not an edge of the base graph")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"edge {key} directed twice")
            seen.add(key)
        if len(seen) != len(self.graph.edges()):
            raise ValueError("every edge must be directed exactly once")

    def reversed(self) -> "Orientation":
        return Orientation(self.graph, frozenset((v, u) for u, v in self.directed))

    def out_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(w for u, w in self.directed if u == v)

    def in_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(u for u, w in self.directed if w == v)


def round_orientation(model: Model) -> Orientation:
    """Each edge points toward the vertex whose left endpoint lies inside the
    other arc; proper models of graphs with at most one universal vertex make
    the rule unambiguous."""
    if not is_proper(model):
        raise AmbiguousDirectionError("direction rule needs a proper model")
    masks = model.point_masks()
    pairs = model.arcs if isinstance(model, SharpArcModel) else model.intervals
    g = model_to_graph(model)
    directed = set()
    for u, v in g.edges():
        u_has_lv = bool(masks[u] >> (pairs[v][0] - 1) & 1)
        v_has_lu = bool(masks[v] >> (pairs[u][0] - 1) & 1)
        if u_has_lv == v_has_lu:
            raise AmbiguousDirectionError(
                f"arcs of {u} and {v} do not determine a unique direction"
            )
        directed.add((u, v) if u_has_lv else (v, u))
    return Orientation(g, frozenset(directed))


def is_round_enumeration(orientation: Orientation, order: CircularOrder) -> bool:
    """Under the order, every vertex must see exactly its in-neighbors on the
    counter-clockwise side of its neighborhood arc and its out-neighbors on
    the clockwise side."""
    g = orientation.graph
    if universal_vertices(g):
        raise UniversalVertexError("round enumerations need endpoint notation")
    nh = closed_neighborhood_hypergraph(g).hypergraph
    if not is_arc_ordering(nh, order):
        raise NotAnArcOrderingError("order is not an arc ordering of the neighborhoods")
    n = g.n
    for v in range(n):
        arc = arc_of(g.closed_neighborhood(v), order)
        if arc is None or arc.kind is not ArcKind.NORMAL:
            raise NotAnArcOrderingError("neighborhood is not an arc under the order")
        pv = order.pos[v]
        pm = order.pos[arc.start]
        incoming = {order.seq[(pm + t) % n] for t in range((pv - pm) % n)}
        pe = order.pos[arc.end]
        outgoing = {order.seq[(pv + 1 + t) % n] for t in range((pe - pv) % n)}
        if incoming != orientation.in_neighbors(v) or outgoing != orientation.out_neighbors(v):
            return False
    return True


def is_straight_enumeration(orientation: Orientation, order: LinearOrder) -> bool:
    """Linear analogue; universal vertices are fine because the full segment
    still has endpoints."""
    g = orientation.graph
    nh = closed_neighborhood_hypergraph(g).hypergraph
    if not is_interval_ordering(nh, order):
        raise NotAnIntervalOrderingError(
            "order is not an interval ordering of the neighborhoods"
        )
    for v in range(g.n):
        iv = interval_of(g.closed_neighborhood(v), order)
        if iv is None or iv.kind is not ArcKind.NORMAL:
            raise NotAnIntervalOrderingError("neighborhood is not an interval")
        pv = order.pos[v]
        incoming = {order.seq[p] for p in range(order.pos[iv.start], pv)}
        outgoing = {order.seq[p] for p in range(pv + 1, order.pos[iv.end] + 1)}
        if incoming != orientation.in_neighbors(v) or outgoing != orientation.out_neighbors(v):
            return False
    return True


# -- sharpening of non-sharp proper models ----------------------------------------


def sharpen_arcs(m: int, arcs: list[tuple[int, int]]) -> SharpArcModel:
    """Normalize a proper arc family on C_m into a sharp model with the two
    classical moves: clone a point shared by an arc end and an arc start
    (the ending arc keeps the later clone), then delete inner points."""
    n = len(arcs)
    if n < 1:
        raise MalformedModelError("need at least one arc")
    work = [(a, b) for a, b in arcs]
    size = m

    def point_mask(a, b, mm):
        return _arc_point_mask(a, b, mm)

    for i in range(n):
        for j in range(n):
            if i != j and point_mask(*work[i], size) & ~point_mask(*work[j], size) == 0:
                raise MalformedModelError("sharpening requires a proper family")

    changed = True
    while changed:
        changed = False
        enders = {}
        starters = {}
        for idx, (a, b) in enumerate(work):
            enders.setdefault(b, []).append(idx)
            starters.setdefault(a, []).append(idx)
        for p in range(1, size + 1):
            e = enders.get(p, [])
            s = starters.get(p, [])
            if len(e) > 1 or len(s) > 1:
                raise MalformedModelError("two arcs share a start or an end; not proper")
            if e and s:
                # split p into p (start keeps it) and p+1 (end moves there)
                new = []
                for a, b in work:
                    na = a + 1 if a > p else a
                    nb = b + 1 if b > p or b == p else b
                    # ends at p move to the clone just after the start clone
                    new.append((na, nb))
                work = new
                size += 1
                changed = True
                break

    used = sorted({x for a, b in work for x in (a, b)})
    renum = {x: i + 1 for i, x in enumerate(used)}
    final = [(renum[a], renum[b]) for a, b in work]
    if len(used) != 2 * n:
        raise MalformedModelError("sharpening produced a degenerate family")
    return SharpArcModel(n=n, arcs=tuple(final))


def sharpen_intervals(m: int, intervals: list[tuple[int, int]]) -> SharpIntervalModel:
    """Interval version of the sharpening moves."""
    n = len(intervals)
    work = [(a, b) for a, b in intervals]
    size = m
    for i in range(n):
        for j in range(n):
            if i != j:
                mi = _interval_point_mask(*work[i])
                mj = _interval_point_mask(*work[j])
                if mi & ~mj == 0:
                    raise MalformedModelError("sharpening requires a proper family")
    changed = True
    while changed:
        changed = False
        enders = {}
        starters = {}
        for idx, (a, b) in enumerate(work):
            enders.setdefault(b, []).append(idx)
            starters.setdefault(a, []).append(idx)
        for p in range(1, size + 1):
            e = enders.get(p, [])
            s = starters.get(p, [])
            if len(e) > 1 or len(s) > 1:
                raise MalformedModelError("two intervals share a start or an end; not proper")
            if e and s:
                new = []
                for a, b in work:
                    na = a + 1 if a > p else a
                    nb = b + 1 if b >= p else b
                    new.append((na, nb))
                work = new
                size += 1
                changed = True
                break
    used = sorted({x for a, b in work for x in (a, b)})
    renum = {x: i + 1 for i, x in enumerate(used)}
    final = [(renum[a], renum[b]) for a, b in work]
    if len(used) != 2 * n:
        raise MalformedModelError("sharpening produced a degenerate family")
    return SharpIntervalModel(n=n, intervals=tuple(final))


# -- random sampling ---------------------------------------------------------------


def random_sharp_arc_model(
    rng: np.random.Generator,
    n: int,
    density: float = 0.5,
    max_universal: int = 1,
    max_tries: int = 500,
) -> SharpArcModel:
    """Sample a sharp PROPER arc model: scatter n start and n end symbols on
    C_2n, then match the i-th start (clockwise) to the (i+s)-th end for the
    shift s nearest the requested density that yields a proper family.
    Words admitting no proper shift are resampled."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return SharpArcModel(n=1, arcs=((1, 2),))
    m = 2 * n
    target = max(0, min(n - 1, round(density * (n - 1))))
    for _ in range(max_tries):
        symbols = np.array([1] * n + [0] * n)
        rng.shuffle(symbols)
        starts = [p + 1 for p in range(m) if symbols[p] == 1]
        ends = [p + 1 for p in range(m) if symbols[p] == 0]
        shifts = sorted(range(n), key=lambda s: (abs(s - target), s))
        for s in shifts:
            arcs = tuple((starts[i], ends[(i + s) % n]) for i in range(n))
            model = SharpArcModel(n=n, arcs=arcs)
            if not is_proper(model):
                continue
            if max_universal is not None:
                g = model_to_graph(model)
                if len(universal_vertices(g)) > max_universal:
                    continue
            return model
    raise RuntimeError(f"no proper sharp model found in {max_tries} tries")


def random_sharp_interval_model(
    rng: np.random.Generator, n: int, max_tries: int = 5000
) -> SharpIntervalModel:
    """Sample a sharp proper interval model: a shuffled start/end word is kept
    when every prefix has at least as many starts as ends, and the parallel
    matching (i-th start with i-th end) is then proper by construction."""
    if n < 1:
        raise ValueError("n must be positive")
    for _ in range(max_tries):
        symbols = np.array([1] * n + [0] * n)
        rng.shuffle(symbols)
        depth = 0
        ok = True
        for x in symbols:
            depth += 1 if x == 1 else -1
            if depth < 0:
                ok = False
                break
        if not ok:
            continue
        starts = [p + 1 for p in range(2 * n) if symbols[p] == 1]
        ends = [p + 1 for p in range(2 * n) if symbols[p] == 0]
        return SharpIntervalModel(
            n=n, intervals=tuple((starts[i], ends[i]) for i in range(n))
        )
    raise RuntimeError(f"no ballot word found in {max_tries} tries")
