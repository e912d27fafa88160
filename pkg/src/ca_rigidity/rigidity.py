"""Uniqueness verdicts for arc and interval orderings.

Each verdict names the effective criterion that justifies it and carries a
machine-checkable witness: a twin pair re-fails ``is_twin_free``, a
disconnection witness re-yields multiple relation components, and oracle
verdicts re-count.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from .enumeration import (
    Mode,
    count_arc_ordering_classes,
    count_interval_ordering_classes,
    default_cap,
)
from .errors import EmptyHyperedgeError, TooLargeError
from .extension import solve_arc_ordering
from .hypergraph import (
    EdgeRelation,
    Hypergraph,
    is_twin_free,
    relation_components,
    strip_trivial_hyperedges,
    twin_classes,
)
from .orders import is_tight_arc_ordering


class RigidityStatus(enum.Enum):
    UNIQUE_ARC = "UniqueArc"
    UNIQUE_TIGHT_ARC = "UniqueTightArc"
    UNIQUE_INTERVAL = "UniqueInterval"
    NOT_UNIQUE = "NotUnique"
    NOT_CA = "NotCA"
    SMALL_INSTANCE = "SmallInstance"


@dataclass(frozen=True)
class RigidityVerdict:
    status: RigidityStatus
    mode: str  # "arc" | "tight-arc" | "interval"
    justification: str
    witness: dict[str, Any] = field(default_factory=dict)
    class_count: int | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "status": self.status.value,
            "mode": self.mode,
            "justification": self.justification,
            "witness": self.witness,
            "class_count": self.class_count,
        }


def _first_twin_pair(h: Hypergraph) -> tuple[int, int] | None:
    for cls in twin_classes(h):
        if len(cls) >= 2:
            return cls[0], cls[1]
    return None


def arc_rigidity(h: Hypergraph, cap: int | None = None) -> RigidityVerdict:
    """Decide uniqueness of the arc ordering via the stripped-core
    connectivity criterion: after removing hyperedges of size 0, 1, n-1 and n,
    the order is unique iff the rest is twin-free and strictly
    overlap-connected (allowing one isolated vertex whose removal restores
    connectivity).  The criterion presumes an arc ordering exists, so the
    solver runs first."""
    if h.has_empty_edge():
        raise EmptyHyperedgeError("rigidity analysis rejects empty hyperedges")
    if h.n <= 3:
        return RigidityVerdict(
            RigidityStatus.SMALL_INSTANCE,
            "arc",
            "orders-equivalent-at-small-n",
            {"n": h.n},
        )
    if solve_arc_ordering(h, cap=cap) is None:
        return RigidityVerdict(RigidityStatus.NOT_CA, "arc", "no-arc-ordering")
    core = strip_trivial_hyperedges(h)
    pair = _first_twin_pair(core)
    if pair is not None:
        return RigidityVerdict(
            RigidityStatus.NOT_UNIQUE,
            "arc",
            "twin-pair-in-stripped-core",
            {"twins": list(pair)},
        )
    # Strict overlaps between core hyperedges are evaluated on the full
    # universe: the one isolated vertex a twin-free core may have never
    # counts against connectivity (shrinking the universe before testing
    # unions breaks the criterion's equivalence with the oracle).
    comps = relation_components(core, EdgeRelation.STRICT_OVERLAP)
    if len(comps.components) == 1 and len(comps.isolated_vertices) <= 1:
        if not comps.isolated_vertices:
            return RigidityVerdict(
                RigidityStatus.UNIQUE_ARC,
                "arc",
                "stripped-core-strictly-overlap-connected",
            )
        return RigidityVerdict(
            RigidityStatus.UNIQUE_ARC,
            "arc",
            "stripped-core-strictly-overlap-connected-beside-one-isolated-vertex",
            {"isolated_vertex": comps.isolated_vertices[0]},
        )
    return RigidityVerdict(
        RigidityStatus.NOT_UNIQUE,
        "arc",
        "stripped-core-disconnected",
        {
            "components": [list(c) for c in comps.components],
            "isolated_vertices": list(comps.isolated_vertices),
        },
    )


def tight_connectivity_for_uniqueness(h: Hypergraph) -> bool:
    """Connectivity premise under which a twin-free hypergraph can have at
    most one tight arc ordering.

    The complete hyperedge is dropped first: its arc is the whole circle, has
    no endpoints, and therefore neither constrains nor transmits placement
    information, so inclusion chains through it do not rigidify anything
    (randomized counterexamples exist when it is kept).  The remaining edges
    must form one strict-intersection component covering all but at most one
    vertex (two uncovered vertices would be twins)."""
    core = Hypergraph(labels=h.labels, edges=tuple(e for e in h.edges if e != h.full))
    comps = relation_components(core, EdgeRelation.STRICT_INTERSECT)
    return len(comps.components) == 1 and len(comps.isolated_vertices) <= 1


def tight_arc_rigidity(h: Hypergraph, cap: int | None = None) -> RigidityVerdict:
    """At most one tight arc ordering is guaranteed for twin-free hypergraphs
    that stay strictly connected without the complete hyperedge; existence is
    decided operationally.  Outside the sufficient condition the oracle counts
    when the instance fits the cap."""
    if h.has_empty_edge():
        raise EmptyHyperedgeError("rigidity analysis rejects empty hyperedges")
    if h.n <= 3:
        return RigidityVerdict(
            RigidityStatus.SMALL_INSTANCE,
            "tight-arc",
            "orders-equivalent-at-small-n",
            {"n": h.n},
        )
    effective = default_cap(circular=True) if cap is None else cap
    twin_free = is_twin_free(h)
    strictly_connected = tight_connectivity_for_uniqueness(h)
    if twin_free and strictly_connected:
        try:
            order = solve_arc_ordering(h, cap=cap)
        except TooLargeError:
            return RigidityVerdict(
                RigidityStatus.NOT_UNIQUE,
                "tight-arc",
                "oracle-required",
                {"undecided": True, "reason": "existence not decidable within the cap"},
            )
        if order is not None and is_tight_arc_ordering(h, order):
            return RigidityVerdict(
                RigidityStatus.UNIQUE_TIGHT_ARC,
                "tight-arc",
                "twin-free-strictly-connected-with-tight-ordering",
                class_count=1,
            )
        if order is None:
            return RigidityVerdict(RigidityStatus.NOT_CA, "tight-arc", "no-arc-ordering")
        if h.n <= effective:
            count = count_arc_ordering_classes(h, Mode.TIGHT_ONLY, effective)
            if count == 1:
                return RigidityVerdict(
                    RigidityStatus.UNIQUE_TIGHT_ARC,
                    "tight-arc",
                    "twin-free-strictly-connected-with-tight-ordering",
                    class_count=1,
                )
            return RigidityVerdict(
                RigidityStatus.NOT_UNIQUE,
                "tight-arc",
                "no-tight-ordering" if count == 0 else "oracle-count",
                class_count=count,
            )
        return RigidityVerdict(
            RigidityStatus.NOT_UNIQUE,
            "tight-arc",
            "oracle-required",
            {"undecided": True, "reason": "tight existence unknown above cap"},
        )
    if h.n <= effective:
        count = count_arc_ordering_classes(h, Mode.TIGHT_ONLY, effective)
        if count == 1:
            return RigidityVerdict(
                RigidityStatus.UNIQUE_TIGHT_ARC, "tight-arc", "oracle-count", class_count=1
            )
        witness: dict[str, Any] = {}
        pair = _first_twin_pair(h)
        if pair is not None:
            witness["twins"] = list(pair)
        if count == 0:
            if solve_arc_ordering(h, cap=cap) is None:
                return RigidityVerdict(RigidityStatus.NOT_CA, "tight-arc", "no-arc-ordering")
            return RigidityVerdict(
                RigidityStatus.NOT_UNIQUE,
                "tight-arc",
                "no-tight-ordering",
                witness,
                class_count=0,
            )
        return RigidityVerdict(
            RigidityStatus.NOT_UNIQUE, "tight-arc", "oracle-count", witness, class_count=count
        )
    raise TooLargeError(
        f"n={h.n} exceeds cap {effective} and the sufficient condition fails"
    )


def interval_rigidity(h: Hypergraph, cap: int | None = None) -> RigidityVerdict:
    """Unique interval ordering iff twin-free, overlap-connected and interval;
    outside that condition the oracle counts (subject to the linear cap)."""
    if h.has_empty_edge():
        raise EmptyHyperedgeError("rigidity analysis rejects empty hyperedges")
    if h.n <= 2:
        return RigidityVerdict(
            RigidityStatus.SMALL_INSTANCE,
            "interval",
            "orders-equivalent-at-small-n",
            {"n": h.n},
        )
    effective = default_cap(circular=False) if cap is None else cap
    if h.n > effective:
        raise TooLargeError(f"n={h.n} exceeds linear enumeration cap {effective}")
    count = count_interval_ordering_classes(h, Mode.ALL, effective)
    if count == 0:
        return RigidityVerdict(RigidityStatus.NOT_CA, "interval", "no-interval-ordering")
    twin_free = is_twin_free(h)
    overlap_connected = relation_components(h, EdgeRelation.OVERLAP).is_connected
    if twin_free and overlap_connected:
        return RigidityVerdict(
            RigidityStatus.UNIQUE_INTERVAL,
            "interval",
            "twin-free-overlap-connected-interval",
            class_count=count,
        )
    if count == 1:
        return RigidityVerdict(
            RigidityStatus.UNIQUE_INTERVAL, "interval", "oracle-count", class_count=1
        )
    witness: dict[str, Any] = {}
    pair = _first_twin_pair(h)
    if pair is not None:
        witness["twins"] = list(pair)
    if not overlap_connected:
        comps = relation_components(h, EdgeRelation.OVERLAP)
        witness["components"] = [list(c) for c in comps.components]
        witness["isolated_vertices"] = list(comps.isolated_vertices)
    return RigidityVerdict(
        RigidityStatus.NOT_UNIQUE, "interval", "oracle-count", witness, class_count=count
    )


@dataclass(frozen=True)
class CrossValidationReport:
    consistent: bool
    verdict: RigidityVerdict
    oracle_all: int | None
    oracle_tight: int | None
    detail: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "consistent": self.consistent,
            "verdict": self.verdict.to_dict(),
            "oracle_all_classes": self.oracle_all,
            "oracle_tight_classes": self.oracle_tight,
            "detail": self.detail,
        }


def cross_validate(
    h: Hypergraph, verdict: RigidityVerdict, cap: int | None = None
) -> CrossValidationReport:
    """Recount ordering classes by brute force and check they agree with the
    verdict; raises TooLargeError above the enumeration cap."""
    if verdict.status is RigidityStatus.SMALL_INSTANCE:
        return CrossValidationReport(True, verdict, None, None, "small instance, nothing to check")
    if verdict.mode == "interval":
        all_classes = count_interval_ordering_classes(h, Mode.ALL, cap)
        tight_classes = count_interval_ordering_classes(h, Mode.TIGHT_ONLY, cap)
    else:
        all_classes = count_arc_ordering_classes(h, Mode.ALL, cap)
        tight_classes = count_arc_ordering_classes(h, Mode.TIGHT_ONLY, cap)
    if verdict.mode == "arc":
        expected = {
            RigidityStatus.UNIQUE_ARC: all_classes == 1,
            RigidityStatus.NOT_UNIQUE: all_classes != 1,
            RigidityStatus.NOT_CA: all_classes == 0,
        }[verdict.status]
        detail = f"arc classes = {all_classes}"
    elif verdict.mode == "tight-arc":
        if verdict.justification == "oracle-required":
            expected = True
            detail = f"undecided verdict, oracle recount = {tight_classes} (informational)"
        else:
            expected = {
                RigidityStatus.UNIQUE_TIGHT_ARC: tight_classes == 1,
                RigidityStatus.NOT_UNIQUE: tight_classes != 1,
                RigidityStatus.NOT_CA: all_classes == 0,
            }[verdict.status]
            detail = f"tight arc classes = {tight_classes}"
    else:
        expected = {
            RigidityStatus.UNIQUE_INTERVAL: all_classes == 1,
            RigidityStatus.NOT_UNIQUE: all_classes != 1,
            RigidityStatus.NOT_CA: all_classes == 0,
        }[verdict.status]
        detail = f"interval classes = {all_classes}"
    return CrossValidationReport(bool(expected), verdict, all_classes, tight_classes, detail)
