"""Constructive placement of hyperedge arcs on a circle.

Given two already-placed arcs for hyperedges A and B (with A strictly
intersecting B) and a third hyperedge H strictly intersecting B, the arc of H
is forced: its intersection with B has known length, so only the side is free,
and the side is decided by set comparisons between A, B and H.  Chaining this
step along a strict-overlap path places a whole strictly overlap-connected
hypergraph, which is how ``solve_arc_ordering`` finds an arc ordering without
enumeration.  Nested pairs must be placed tightly (sharing an endpoint) for
the inclusion cases to be decidable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .bitset import bits, full_mask, is_subset
from .errors import (
    EmptyHyperedgeError,
    InconsistentPlacementError,
    RelationViolatedError,
    TooLargeError,
)
from .hypergraph import EdgeRelation, Hypergraph, relation_holds
from .orders import CircularOrder, is_arc_ordering


@dataclass(frozen=True)
class CircleArc:
    """Arc of points on the circle C_m, from ``start`` clockwise to ``end``
    inclusive; 0-based points, never empty."""

    m: int
    start: int
    end: int

    def __post_init__(self):
        if not (0 <= self.start < self.m and 0 <= self.end < self.m):
            raise InconsistentPlacementError("arc endpoints outside the circle")

    @classmethod
    def from_start_size(cls, m: int, start: int, size: int) -> "CircleArc":
        if not 1 <= size <= m:
            raise InconsistentPlacementError(f"arc size {size} invalid on C_{m}")
        return cls(m, start % m, (start + size - 1) % m)

    @property
    def size(self) -> int:
        return (self.end - self.start) % self.m + 1

    @property
    def mask(self) -> int:
        s = self.size
        if s == self.m:
            return full_mask(self.m)
        # shifting modulo 2^m - 1 rotates the bit block around the circle
        return ((1 << s) - 1 << self.start) % ((1 << self.m) - 1)

    def contains_point(self, p: int) -> bool:
        return (p - self.start) % self.m <= (self.end - self.start) % self.m

    def positions(self) -> tuple[int, ...]:
        return tuple((self.start + i) % self.m for i in range(self.size))


@dataclass(frozen=True)
class PlacedArcSystem:
    """Circle size plus a mapping from hyperedge masks to their placed arcs."""

    m: int
    arcs: dict[int, CircleArc]

    def covered_positions(self) -> tuple[int, ...]:
        seen = set()
        for arc in self.arcs.values():
            seen.update(arc.positions())
        return tuple(sorted(seen))


def _classify(x: int, y: int, n: int) -> str:
    """Relation of x to y: strict overlap, x inside y, or y inside x."""
    if x == y:
        raise RelationViolatedError("equal hyperedges give no placement information")
    if relation_holds(EdgeRelation.STRICT_OVERLAP, x, y, n):
        return "so"
    if is_subset(x, y):
        return "x_in_y"
    if is_subset(y, x):
        return "y_in_x"
    raise RelationViolatedError("hyperedges do not strictly intersect")


def _comparable(x: int, y: int) -> bool:
    return is_subset(x, y) or is_subset(y, x)


def extend_placement(
    placed_a: CircleArc,
    placed_b: CircleArc,
    set_a: int,
    set_b: int,
    set_h: int,
    n: int,
) -> CircleArc:
    """The unique arc for H dictated by the placed arcs of A and B.

    Preconditions: A strictly intersects B, B strictly intersects H, the
    placements match |A|, |B|, |A \\cap B|, and nested placements are tight.
    """
    if set_a == 0 or set_b == 0 or set_h == 0:
        raise EmptyHyperedgeError("placement is defined for nonempty hyperedges")
    full = full_mask(n)
    if (set_a | set_b | set_h) & ~full:
        raise RelationViolatedError("sets exceed the universe")
    if placed_a.m != n or placed_b.m != n:
        raise InconsistentPlacementError("placed arcs live on the wrong circle")
    if placed_a.size != set_a.bit_count() or placed_b.size != set_b.bit_count():
        raise InconsistentPlacementError("placed arc sizes disagree with the sets")
    if set_h == set_b:
        return placed_b
    if set_h == set_a:
        return placed_a

    rel_ab = _classify(set_a, set_b, n)
    rel_bh = _classify(set_b, set_h, n)

    mask_a, mask_b = placed_a.mask, placed_b.mask
    if (mask_a & mask_b).bit_count() != (set_a & set_b).bit_count():
        raise InconsistentPlacementError("placed intersection length disagrees")

    # Handedness of the seed pair: True matches the proof's "clockwise" frame
    # (the arc of B meets the clockwise end of the arc of A).
    if rel_ab == "so":
        plus_in = placed_b.contains_point(placed_a.end)
        minus_in = placed_b.contains_point(placed_a.start)
        if plus_in == minus_in:
            raise InconsistentPlacementError(
                "strictly overlapping arcs must contain exactly one endpoint of each other"
            )
        chi_cw = plus_in
    elif rel_ab == "y_in_x":  # B inside A
        if placed_b.end == placed_a.end:
            chi_cw = True
        elif placed_b.start == placed_a.start:
            chi_cw = False
        else:
            raise InconsistentPlacementError("nested placement must share an endpoint")
    else:  # A inside B
        if placed_a.end == placed_b.end:
            chi_cw = True
        elif placed_a.start == placed_b.start:
            chi_cw = False
        else:
            raise InconsistentPlacementError("nested placement must share an endpoint")

    # Which endpoint of B's arc the arc of H is anchored at, in the clockwise
    # frame; a False pick means the B.start side.
    excess_comparable = _comparable(set_a & ~set_b, set_h & ~set_b)
    if rel_ab in ("so", "y_in_x"):
        if rel_bh == "so":
            pick_plus = not excess_comparable
        elif rel_bh == "x_in_y":  # B inside H
            pick_plus = excess_comparable
        else:  # H inside B
            if rel_ab == "so":
                pick_plus = not is_subset(set_a & set_b, set_h)
            else:
                pick_plus = True  # forced by tightness
    else:  # A inside B
        if rel_bh == "so":
            pick_plus = is_subset(set_h & set_b, set_a)
        elif rel_bh == "y_in_x":  # H inside B
            pick_plus = _comparable(set_h, set_a)
        else:  # B inside H: forced by tightness
            pick_plus = True
    if not chi_cw:
        pick_plus = not pick_plus

    size_h = set_h.bit_count()
    if rel_bh == "so":
        ell = (set_h & set_b).bit_count()
        if pick_plus:
            start = (placed_b.end - ell + 1) % n
        else:
            start = (placed_b.start + ell - size_h) % n
        return CircleArc.from_start_size(n, start, size_h)
    if pick_plus:
        return CircleArc.from_start_size(n, (placed_b.end - size_h + 1) % n, size_h)
    return CircleArc.from_start_size(n, placed_b.start, size_h)


def _strict_overlap_adjacency(core: list[int], n: int) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in core]
    for i in range(len(core)):
        for j in range(i + 1, len(core)):
            if relation_holds(EdgeRelation.STRICT_OVERLAP, core[i], core[j], n):
                adj[i].append(j)
                adj[j].append(i)
    return adj


def place_strictly_overlap_connected(
    h: Hypergraph, core: list[int]
) -> PlacedArcSystem | None:
    """Place a strictly overlap-connected hyperedge core by chained extension;
    None when some step is inconsistent (the core is not circular-arc)."""
    n = h.n
    adj = _strict_overlap_adjacency(core, n)
    placed: dict[int, CircleArc] = {}
    parent: dict[int, int] = {}

    e0 = core[0]
    placed[e0] = CircleArc.from_start_size(n, 0, e0.bit_count())
    if len(core) > 1:
        j1 = adj[0][0]
        e1 = core[j1]
        ell = (e0 & e1).bit_count()
        placed[e1] = CircleArc.from_start_size(n, e0.bit_count() - ell, e1.bit_count())
        parent[e0] = e1
        parent[e1] = e0
        queue = deque([0, j1])
        seen = {0, j1}
        try:
            while queue:
                bi = queue.popleft()
                b = core[bi]
                for hi in adj[bi]:
                    if hi in seen:
                        continue
                    hh = core[hi]
                    placed[hh] = extend_placement(
                        placed[parent[b]], placed[b], parent[b], b, hh, n
                    )
                    parent[hh] = b
                    seen.add(hi)
                    queue.append(hi)
        except (InconsistentPlacementError, RelationViolatedError):
            return None
    return PlacedArcSystem(m=n, arcs=placed)


def _constructive_order(h: Hypergraph, core: list[int]) -> CircularOrder | None:
    """Read off a vertex order from the forced placement of a strictly
    overlap-connected core; remaining freedom (between twins and for vertices
    outside every core hyperedge) resolves by ascending vertex index."""
    n = h.n
    system = place_strictly_overlap_connected(h, core)
    if system is None:
        return None

    pos_sig = [0] * n
    vert_sig = [0] * n
    for k, e in enumerate(core):
        arc = system.arcs[e]
        for p in arc.positions():
            pos_sig[p] |= 1 << k
        for v in bits(e):
            vert_sig[v] |= 1 << k
    groups_pos: dict[int, list[int]] = {}
    groups_vert: dict[int, list[int]] = {}
    for p in range(n):
        groups_pos.setdefault(pos_sig[p], []).append(p)
    for v in range(n):
        groups_vert.setdefault(vert_sig[v], []).append(v)
    if groups_pos.keys() != groups_vert.keys():
        return None
    seq = [0] * n
    for sig, positions in groups_pos.items():
        verts = groups_vert[sig]
        if len(verts) != len(positions):
            return None
        for p, v in zip(positions, verts):
            seq[p] = v
    return CircularOrder(tuple(seq))


def solve_arc_ordering(h: Hypergraph, cap: int | None = None) -> CircularOrder | None:
    """Some arc ordering of the hypergraph, or None when it is not
    circular-arc.

    Hyperedges of size 0, 1, n-1 and n never constrain arc orderings, so the
    solver works on the remaining core.  When that core is strictly
    overlap-connected the ordering is built constructively (leftover freedom
    between twins is resolved by ascending vertex index) and verified;
    otherwise the enumeration oracle decides, subject to its cap.
    """
    if h.has_empty_edge():
        raise EmptyHyperedgeError("solving rejects empty hyperedges")
    n = h.n
    identity = CircularOrder(tuple(range(n)))
    if n <= 3:
        return identity
    core = [e for e in h.edges if 1 < e.bit_count() < n - 1]
    if not core:
        return identity
    adj = _strict_overlap_adjacency(core, n)
    seen = [False] * len(core)
    stack = [0]
    seen[0] = True
    reached = 1
    while stack:
        i = stack.pop()
        for j in adj[i]:
            if not seen[j]:
                seen[j] = True
                reached += 1
                stack.append(j)
    if reached == len(core):
        order = _constructive_order(h, core)
        if order is not None and is_arc_ordering(h, order):
            return order
        return None

    from .enumeration import Mode, default_cap, enumerate_arc_orderings

    effective = default_cap(circular=True) if cap is None else cap
    if n > effective:
        raise TooLargeError(
            f"no strictly overlap-connected core; enumeration needed but n={n} "
            f"exceeds cap {effective}"
        )
    classes = enumerate_arc_orderings(h, Mode.ALL, effective)
    return classes[0] if classes else None
