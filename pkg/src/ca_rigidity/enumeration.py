"""Brute-force ordering oracles and the strict-overlap uniqueness criterion.

Enumeration visits one representative per symmetry class (rotation+reflection
for circles, reflection for segments) and is the ground truth every
structural shortcut in this package is checked against.
"""

from __future__ import annotations

import enum
import os

from . import kernels
from .bitset import is_subset, to_indices
from .errors import EmptyHyperedgeError, NotCircularArcError, TooLargeError
from .hypergraph import Hypergraph
from .orders import CircularOrder, LinearOrder

DEFAULT_CIRCULAR_CAP = 9
DEFAULT_LINEAR_CAP = 8
QUILLIOT_CAP = 20


class Mode(enum.Enum):
    ALL = "all"
    TIGHT_ONLY = "tight-only"


def default_cap(circular: bool) -> int:
    env = os.environ.get("CA_RIGIDITY_CAP")
    if env is not None:
        return int(env)
    return DEFAULT_CIRCULAR_CAP if circular else DEFAULT_LINEAR_CAP


def _guard(h: Hypergraph, cap_n: int | None, circular: bool) -> int:
    if h.has_empty_edge():
        raise EmptyHyperedgeError("ordering enumeration rejects empty hyperedges")
    cap = default_cap(circular) if cap_n is None else cap_n
    hard = kernels.MAX_CIRCULAR_N if circular else kernels.MAX_LINEAR_N
    cap = min(cap, hard)
    if h.n > cap:
        raise TooLargeError(
            f"universe size {h.n} exceeds enumeration cap {cap} "
            f"({'circular' if circular else 'linear'})"
        )
    return cap


def tight_pairs(h: Hypergraph, circular: bool) -> tuple[tuple[int, int], ...]:
    """Index pairs (i, j) with edge_i a subset of edge_j that the tightness
    check quantifies over; the complete arc is excluded in the circular case
    because it has no endpoints."""
    full = h.full
    out = []
    for i, a in enumerate(h.edges):
        if a == 0:
            continue
        for j, b in enumerate(h.edges):
            if i == j:
                continue
            if circular and b == full:
                continue
            if is_subset(a, b):
                out.append((i, j))
    return tuple(out)


def arc_ordering_class_keys(
    h: Hypergraph, mode: Mode = Mode.ALL, cap_n: int | None = None
):
    _guard(h, cap_n, circular=True)
    tight = mode is Mode.TIGHT_ONLY
    pairs = tight_pairs(h, circular=True) if tight else ()
    return kernels.scan_circular(h.n, h.edges, pairs, tight)


def interval_ordering_class_keys(
    h: Hypergraph, mode: Mode = Mode.ALL, cap_n: int | None = None
):
    _guard(h, cap_n, circular=False)
    tight = mode is Mode.TIGHT_ONLY
    pairs = tight_pairs(h, circular=False) if tight else ()
    return kernels.scan_linear(h.n, h.edges, pairs, tight)


def enumerate_arc_orderings(
    h: Hypergraph, mode: Mode = Mode.ALL, cap_n: int | None = None
) -> tuple[CircularOrder, ...]:
    keys = arc_ordering_class_keys(h, mode, cap_n)
    return tuple(CircularOrder(kernels.decode_key(k, h.n)) for k in keys.tolist())


def enumerate_interval_orderings(
    h: Hypergraph, mode: Mode = Mode.ALL, cap_n: int | None = None
) -> tuple[LinearOrder, ...]:
    keys = interval_ordering_class_keys(h, mode, cap_n)
    return tuple(LinearOrder(kernels.decode_key(k, h.n)) for k in keys.tolist())


def count_arc_ordering_classes(
    h: Hypergraph, mode: Mode = Mode.ALL, cap_n: int | None = None
) -> int:
    return int(arc_ordering_class_keys(h, mode, cap_n).shape[0])


def count_interval_ordering_classes(
    h: Hypergraph, mode: Mode = Mode.ALL, cap_n: int | None = None
) -> int:
    return int(interval_ordering_class_keys(h, mode, cap_n).shape[0])


def quilliot_witness(h: Hypergraph) -> int:
    """First vertex subset X with 1 < |X| < n-1 strictly overlapped by no
    hyperedge, as a bitmask, or -1 when none exists."""
    if h.has_empty_edge():
        raise EmptyHyperedgeError("the criterion rejects empty hyperedges")
    if h.n > QUILLIOT_CAP:
        raise TooLargeError(f"subset scan supports n <= {QUILLIOT_CAP}")
    return kernels.quilliot_witness(h.n, h.edges)


def quilliot_unique(h: Hypergraph, check_ca: bool = True, cap_n: int | None = None) -> bool:
    """Uniqueness criterion for circular-arc hypergraphs: the arc ordering is
    unique (up to symmetry) iff every X with 1 < |X| < n-1 is strictly
    overlapped by some hyperedge.

    The criterion presumes the hypergraph is circular-arc; with ``check_ca``
    this is verified first (raising NotCircularArcError otherwise).
    """
    if check_ca:
        from .extension import solve_arc_ordering

        if solve_arc_ordering(h, cap=cap_n) is None:
            raise NotCircularArcError("criterion applies to circular-arc hypergraphs")
    return quilliot_witness(h) == -1


def witness_set(h: Hypergraph, witness_mask: int) -> frozenset[int]:
    return frozenset(to_indices(witness_mask))
