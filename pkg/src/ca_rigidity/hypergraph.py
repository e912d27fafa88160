"""Finite hypergraphs over a fixed vertex universe and the four binary relations
(overlap, strict overlap, intersect, strict intersect) together with the
connectivity notions built on them.

Vertices are dense integer indices into the universe; display labels are
I/O-only.  Hyperedges are stored as int bitmasks and deduplicated on
construction.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable
from dataclasses import dataclass

from .bitset import bits, default_labels, full_mask, is_subset, mask_of, to_indices
from .errors import EmptyHyperedgeError, PreconditionViolatedError, UniverseMismatchError

MAX_UNIVERSE = 4096


class EdgeRelation(enum.Enum):
    OVERLAP = "overlap"
    STRICT_OVERLAP = "strict-overlap"
    INTERSECT = "intersect"
    STRICT_INTERSECT = "strict-intersect"


def _check_universe(a: int, b: int, n: int | None) -> None:
    if a < 0 or b < 0:
        raise UniverseMismatchError("negative bitmask")
    if n is not None and (a >> n or b >> n):
        raise UniverseMismatchError(f"set exceeds universe of size {n}")


def intersects(a: int, b: int) -> bool:
    """Nonempty intersection."""
    return a & b != 0


def overlaps(a: int, b: int, n: int | None = None) -> bool:
    """Nonempty intersection and neither set includes the other."""
    _check_universe(a, b, n)
    return a & b != 0 and a & ~b != 0 and b & ~a != 0


def strictly_overlaps(a: int, b: int, n: int) -> bool:
    """Overlap whose union also misses some vertex of the universe."""
    _check_universe(a, b, n)
    return overlaps(a, b) and (a | b) != full_mask(n)


def strictly_intersects(a: int, b: int, n: int) -> bool:
    """Strict overlap, or inclusion either way (nonempty sets only)."""
    if a == 0 or b == 0:
        raise EmptyHyperedgeError("strict intersection is defined for nonempty sets")
    _check_universe(a, b, n)
    return strictly_overlaps(a, b, n) or is_subset(a, b) or is_subset(b, a)


def relation_holds(rel: EdgeRelation, a: int, b: int, n: int) -> bool:
    if rel is EdgeRelation.OVERLAP:
        return overlaps(a, b, n)
    if rel is EdgeRelation.STRICT_OVERLAP:
        return strictly_overlaps(a, b, n)
    if rel is EdgeRelation.INTERSECT:
        return intersects(a, b)
    if rel is EdgeRelation.STRICT_INTERSECT:
        if a == 0 or b == 0:
            return False
        return strictly_intersects(a, b, n)
    raise ValueError(f"unknown relation {rel!r}")


@dataclass(frozen=True)
class Hypergraph:
    """Vertex universe plus a deduplicated set of hyperedge bitmasks.

    ``edges`` is sorted ascending by mask value so equal hypergraphs compare
    equal regardless of input order.
    """

    labels: tuple[str, ...]
    edges: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if n < 1:
            raise ValueError("universe must contain at least one vertex")
        if n > MAX_UNIVERSE:
            raise ValueError(f"universe size {n} exceeds supported maximum {MAX_UNIVERSE}")
        if len(set(self.labels)) != n:
            raise ValueError("vertex labels must be unique")
        full = full_mask(n)
        for e in self.edges:
            if e < 0 or e & ~full:
                raise UniverseMismatchError("hyperedge exceeds the vertex universe")
        deduped = tuple(sorted(set(self.edges)))
        if deduped != self.edges:
            object.__setattr__(self, "edges", deduped)

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edge_sets(
        cls,
        edge_sets: Iterable[Iterable[int]],
        n: int | None = None,
        labels: tuple[str, ...] | None = None,
    ) -> "Hypergraph":
        masks = [mask_of(s) for s in edge_sets]
        if labels is None:
            if n is None:
                top = max((m.bit_length() for m in masks), default=0)
                n = max(top, 1)
            labels = default_labels(n)
        return cls(labels=tuple(labels), edges=tuple(masks))

    @classmethod
    def from_label_sets(
        cls, labels: Iterable[str], edge_label_sets: Iterable[Iterable[str]]
    ) -> "Hypergraph":
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        masks = []
        for s in edge_label_sets:
            masks.append(mask_of(index[lab] for lab in s))
        return cls(labels=labels, edges=tuple(masks))

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def edge_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(to_indices(e)) for e in self.edges)

    def edge_labels(self, edge: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bits(edge))

    def mask_from_labels(self, names: Iterable[str]) -> int:
        index = {lab: i for i, lab in enumerate(self.labels)}
        return mask_of(index[name] for name in names)

    def has_empty_edge(self) -> bool:
        return 0 in self.edges

    def covered_mask(self) -> int:
        m = 0
        for e in self.edges:
            m |= e
        return m


# -- twins ------------------------------------------------------------------


def twin_classes(h: Hypergraph) -> tuple[tuple[int, ...], ...]:
    """Partition of the universe into twin classes, in universe order.

    Two vertices are twins when every hyperedge contains both or neither.
    """
    sig: dict[int, list[int]] = {}
    for v in range(h.n):
        s = 0
        for k, e in enumerate(h.edges):
            if e >> v & 1:
                s |= 1 << k
        sig.setdefault(s, []).append(v)
    classes = sorted(sig.values(), key=lambda c: c[0])
    return tuple(tuple(c) for c in classes)


def is_twin_free(h: Hypergraph) -> bool:
    return all(len(c) == 1 for c in twin_classes(h))


# -- relation components ------------------------------------------------------


@dataclass(frozen=True)
class RelationComponents:
    """Connected components of the graph on hyperedges under one relation.

    ``components`` holds edge indices into ``Hypergraph.edges``;
    ``isolated_vertices`` are vertices contained in no hyperedge at all.
    """

    relation: EdgeRelation
    components: tuple[tuple[int, ...], ...]
    isolated_vertices: tuple[int, ...]

    @property
    def is_connected(self) -> bool:
        return not self.isolated_vertices and len(self.components) == 1


def relation_components(h: Hypergraph, rel: EdgeRelation) -> RelationComponents:
    m = len(h.edges)
    n = h.n
    seen = [False] * m
    comps: list[tuple[int, ...]] = []
    for start in range(m):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(m):
                if not seen[j] and relation_holds(rel, h.edges[i], h.edges[j], n):
                    seen[j] = True
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: c[0])
    isolated = tuple(v for v in range(n) if not (h.covered_mask() >> v & 1))
    return RelationComponents(rel, tuple(comps), isolated)


def is_relation_connected(h: Hypergraph, rel: EdgeRelation) -> bool:
    return relation_components(h, rel).is_connected


# -- derived hypergraphs -------------------------------------------------------


def complement_hypergraph(h: Hypergraph) -> Hypergraph:
    """Hyperedges V minus E, deduplicated; empty complements are retained."""
    full = h.full
    return Hypergraph(labels=h.labels, edges=tuple(full ^ e for e in h.edges))


def strip_trivial_hyperedges(h: Hypergraph) -> Hypergraph:
    """Drop hyperedges of size 0, 1, n-1 and n; requires n >= 4."""
    n = h.n
    if n < 4:
        raise PreconditionViolatedError("n >= 4", f"stripping requires n >= 4, got {n}")
    kept = tuple(e for e in h.edges if 1 < e.bit_count() < n - 1)
    return Hypergraph(labels=h.labels, edges=kept)


def remove_vertex(h: Hypergraph, v: int) -> Hypergraph:
    """Drop vertex v from the universe and reindex the remaining vertices."""
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} not in universe")
    labels = h.labels[:v] + h.labels[v + 1 :]
    low = (1 << v) - 1
    edges = tuple((e & low) | ((e >> (v + 1)) << v) for e in h.edges)
    return Hypergraph(labels=labels, edges=edges)
