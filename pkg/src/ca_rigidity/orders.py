"""Circular and linear vertex orders, arcs of hyperedges under an order,
tightness checks, and canonical forms under the order symmetries
(rotation + reflection for circles, reflection for segments).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .bitset import full_mask, rotl
from .errors import (
    NotAnArcOrderingError,
    NotAnIntervalOrderingError,
    UniverseMismatchError,
)
from .hypergraph import Hypergraph


def _validate_permutation(seq: tuple[int, ...]) -> tuple[int, ...]:
    n = len(seq)
    if n == 0:
        raise ValueError("order must contain at least one vertex")
    if sorted(seq) != list(range(n)):
        raise ValueError("order must be a permutation of 0..n-1")
    pos = [0] * n
    for p, v in enumerate(seq):
        pos[v] = p
    return tuple(pos)


@dataclass(frozen=True)
class CircularOrder:
    """Permutation of the universe read circularly (last position precedes first)."""

    seq: tuple[int, ...]
    pos: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "seq", tuple(self.seq))
        object.__setattr__(self, "pos", _validate_permutation(self.seq))

    @property
    def n(self) -> int:
        return len(self.seq)

    def reversed(self) -> "CircularOrder":
        return CircularOrder(tuple(reversed(self.seq)))

    def rotated(self, shift: int) -> "CircularOrder":
        n = self.n
        return CircularOrder(tuple(self.seq[(i + shift) % n] for i in range(n)))

    def labelled(self, labels: tuple[str, ...]) -> tuple[str, ...]:
        return tuple(labels[v] for v in self.seq)


@dataclass(frozen=True)
class LinearOrder:
    """Permutation of the universe read left to right."""

    seq: tuple[int, ...]
    pos: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "seq", tuple(self.seq))
        object.__setattr__(self, "pos", _validate_permutation(self.seq))

    @property
    def n(self) -> int:
        return len(self.seq)

    def reversed(self) -> "LinearOrder":
        return LinearOrder(tuple(reversed(self.seq)))

    def labelled(self, labels: tuple[str, ...]) -> tuple[str, ...]:
        return tuple(labels[v] for v in self.seq)


class ArcKind(enum.Enum):
    NORMAL = "normal"
    COMPLETE = "complete"
    EMPTY = "empty"


@dataclass(frozen=True)
class Arc:
    """Arc of consecutive vertices under a circular order.

    ``start``/``end`` are vertex ids and are only meaningful for NORMAL arcs:
    the complete arc has no endpoints and the empty arc has none either.
    """

    kind: ArcKind
    start: int | None = None
    end: int | None = None

    @classmethod
    def complete(cls) -> "Arc":
        return cls(ArcKind.COMPLETE)

    @classmethod
    def empty(cls) -> "Arc":
        return cls(ArcKind.EMPTY)


@dataclass(frozen=True)
class Interval:
    """Interval of consecutive vertices under a linear order.

    Unlike the complete arc, the full universe is an interval with genuine
    endpoints, so NORMAL covers it; only the empty set is special.
    """

    kind: ArcKind
    start: int | None = None
    end: int | None = None


def _position_mask(edge: int, pos: tuple[int, ...]) -> int:
    m = 0
    v = edge
    while v:
        low = v & -v
        m |= 1 << pos[low.bit_length() - 1]
        v ^= low
    return m


def arc_of(edge: int, order: CircularOrder) -> Arc | None:
    """The unique arc equal to the set, or None when it is not circularly
    consecutive.  The full universe maps to the complete arc, never to a
    rotated [a-, a+]."""
    n = order.n
    if edge >> n:
        raise UniverseMismatchError("hyperedge exceeds the order's universe")
    if edge == 0:
        return Arc.empty()
    full = full_mask(n)
    if edge == full:
        return Arc.complete()
    p = _position_mask(edge, order.pos)
    starts = p & ~rotl(p, n)
    if starts.bit_count() != 1:
        return None
    s = starts.bit_length() - 1
    e = (s + edge.bit_count() - 1) % n
    return Arc(ArcKind.NORMAL, start=order.seq[s], end=order.seq[e])


def interval_of(edge: int, order: LinearOrder) -> Interval | None:
    """The interval equal to the set, or None when not consecutive."""
    n = order.n
    if edge >> n:
        raise UniverseMismatchError("hyperedge exceeds the order's universe")
    if edge == 0:
        return Interval(ArcKind.EMPTY)
    p = _position_mask(edge, order.pos)
    starts = p & ~((p << 1) & full_mask(n))
    if starts.bit_count() != 1:
        return None
    s = starts.bit_length() - 1
    e = s + edge.bit_count() - 1
    return Interval(ArcKind.NORMAL, start=order.seq[s], end=order.seq[e])


def _check_same_universe(h: Hypergraph, order: CircularOrder | LinearOrder) -> None:
    if h.n != order.n:
        raise UniverseMismatchError(
            f"hypergraph universe has {h.n} vertices, order has {order.n}"
        )


def is_arc_ordering(h: Hypergraph, order: CircularOrder) -> bool:
    _check_same_universe(h, order)
    return all(arc_of(e, order) is not None for e in h.edges)


def is_interval_ordering(h: Hypergraph, order: LinearOrder) -> bool:
    _check_same_universe(h, order)
    return all(interval_of(e, order) is not None for e in h.edges)


def _inclusion_pairs(h: Hypergraph, drop_full: bool):
    full = h.full
    for i, a in enumerate(h.edges):
        if a == 0:
            continue
        for j, b in enumerate(h.edges):
            if i == j or (drop_full and b == full):
                continue
            if a & ~b == 0:
                yield a, b


def is_tight_arc_ordering(h: Hypergraph, order: CircularOrder) -> bool:
    """Every nested pair of hyperedges (A subset of B, A nonempty, B not the
    whole universe) maps to arcs sharing a start or an end."""
    if not is_arc_ordering(h, order):
        raise NotAnArcOrderingError("order is not an arc ordering of the hypergraph")
    for a, b in _inclusion_pairs(h, drop_full=True):
        arc_a = arc_of(a, order)
        arc_b = arc_of(b, order)
        if arc_a.start != arc_b.start and arc_a.end != arc_b.end:
            return False
    return True


def is_tight_interval_ordering(h: Hypergraph, order: LinearOrder) -> bool:
    """Linear analogue; the full universe participates since it has endpoints."""
    if not is_interval_ordering(h, order):
        raise NotAnIntervalOrderingError(
            "order is not an interval ordering of the hypergraph"
        )
    for a, b in _inclusion_pairs(h, drop_full=False):
        iv_a = interval_of(a, order)
        iv_b = interval_of(b, order)
        if iv_a.start != iv_b.start and iv_a.end != iv_b.end:
            return False
    return True


# -- canonical forms -----------------------------------------------------------


def canonical_circular(order: CircularOrder) -> tuple[int, ...]:
    """Lexicographically least index sequence over all rotations and both
    reflections; equal keys exactly characterize equality up to symmetry."""
    n = order.n
    seq = order.seq
    best = None
    for r in range(n):
        fwd = tuple(seq[(r + i) % n] for i in range(n))
        bwd = tuple(seq[(r - i) % n] for i in range(n))
        for cand in (fwd, bwd):
            if best is None or cand < best:
                best = cand
    return best


def canonical_linear(order: LinearOrder) -> tuple[int, ...]:
    rev = tuple(reversed(order.seq))
    return min(order.seq, rev)


def orders_equal_up_to_symmetry(
    o1: CircularOrder | LinearOrder, o2: CircularOrder | LinearOrder
) -> bool:
    if type(o1) is not type(o2):
        raise UniverseMismatchError("cannot compare circular and linear orders")
    if o1.n != o2.n:
        raise UniverseMismatchError("orders live over different universes")
    if isinstance(o1, CircularOrder):
        return canonical_circular(o1) == canonical_circular(o2)
    return canonical_linear(o1) == canonical_linear(o2)
