"""Property suites driven by the CLI ``verify`` command.

Each suite walks a seed-deterministic corpus (either generated on the fly or
loaded from a corpus directory), checks the structural shortcuts against the
brute-force oracles, and reports machine-readable violations.  Instances that
exceed an enumeration cap are skipped, not failed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any

from . import kernels
from .corpus import ca_hypergraph_corpus, pca_graph_corpus, sharp_model_corpus
from .enumeration import (
    Mode,
    count_arc_ordering_classes,
    count_interval_ordering_classes,
    quilliot_unique,
    tight_pairs,
)
from .errors import PreconditionViolatedError, TooLargeError
from .graphs import (
    Graph,
    NrigidCase,
    nrigid_verdict,
    strict_connectedness_of_neighborhoods,
    theorem_ovconn_check,
)
from .hypergraph import EdgeRelation, Hypergraph, is_twin_free, relation_components
from .models import (
    SharpArcModel,
    SharpIntervalModel,
    geometric_order,
    model_to_graph,
    models_equal_up_to_symmetry,
    reconstruct_arc,
    reconstruct_interval,
)
from .orders import (
    CircularOrder,
    LinearOrder,
    canonical_circular,
    canonical_linear,
    is_arc_ordering,
    is_interval_ordering,
    is_tight_arc_ordering,
    is_tight_interval_ordering,
)
from .rigidity import RigidityStatus, arc_rigidity


@dataclass
class SuiteResult:
    suite: str
    instances: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    skipped: list[dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def violate(self, instance: str, prop: str, witness: Any) -> None:
        self.violations.append({"instance": instance, "property": prop, "witness": witness})

    def skip(self, instance: str, reason: str) -> None:
        self.skipped.append({"instance": instance, "reason": reason})

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "instances": self.instances,
            "ok": self.ok,
            "violations": sorted(self.violations, key=lambda v: str(v["instance"])),
            "skipped": sorted(self.skipped, key=lambda s: str(s["instance"])),
        }


def _check_hypergraph_theorems(res: SuiteResult, inst: str, h: Hypergraph) -> None:
    if h.has_empty_edge() or h.n < 4:
        res.skip(inst, "outside criterion hypotheses")
        return
    try:
        count = count_arc_ordering_classes(h, Mode.ALL)
    except TooLargeError:
        res.skip(inst, "exceeds enumeration cap")
        return
    unique = quilliot_unique(h, check_ca=False) if count else None
    verdict = arc_rigidity(h)
    if count == 0:
        if verdict.status is not RigidityStatus.NOT_CA:
            res.violate(inst, "not-circular-arc-detected", verdict.to_dict())
        return
    if not ((count == 1) == unique == (verdict.status is RigidityStatus.UNIQUE_ARC)):
        res.violate(
            inst,
            "strict-overlap-criterion-equivalence",
            {"classes": count, "criterion": unique, "verdict": verdict.to_dict()},
        )
    if is_twin_free(h):
        if relation_components(h, EdgeRelation.STRICT_OVERLAP).is_connected and count != 1:
            res.violate(inst, "unique-ordering-when-strictly-overlap-connected", {"classes": count})
        from .rigidity import tight_connectivity_for_uniqueness

        if tight_connectivity_for_uniqueness(h):
            tight = count_arc_ordering_classes(h, Mode.TIGHT_ONLY)
            if tight > 1:
                res.violate(inst, "at-most-one-tight-arc-ordering", {"tight_classes": tight})
        if relation_components(h, EdgeRelation.INTERSECT).is_connected and h.n <= 8:
            tight_lin = count_interval_ordering_classes(h, Mode.TIGHT_ONLY)
            if tight_lin > 1:
                res.violate(inst, "at-most-one-tight-interval-ordering", {"tight_classes": tight_lin})


def _check_graph_theorems(res: SuiteResult, inst: str, g: Graph) -> None:
    try:
        verdict = nrigid_verdict(g)
    except TooLargeError:
        res.skip(inst, "exceeds enumeration cap")
        return
    except PreconditionViolatedError as exc:
        res.skip(inst, f"outside theorem hypotheses: {exc.hypothesis}")
        return
    if verdict.case is NrigidCase.NON_BIPARTITE_COMPLEMENT:
        if verdict.oracle_all is not None and (verdict.oracle_all != 1 or verdict.oracle_tight != 1):
            res.violate(inst, "unique-all-tight-ordering-for-non-bipartite-complement", verdict.to_dict())
        if not strict_connectedness_of_neighborhoods(g):
            res.violate(inst, "strictly-connected-neighborhoods", {})
        if not theorem_ovconn_check(g):
            res.violate(inst, "stripped-neighborhoods-strictly-overlap-connected", {})
    elif verdict.case is NrigidCase.BIPARTITE_CONNECTED_COMPLEMENT:
        if verdict.oracle_tight is not None and verdict.oracle_tight != 2:
            res.violate(inst, "exactly-two-tight-orderings", verdict.to_dict())


def run_theorems_suite(
    seed: int = 0,
    hypergraphs: int = 1500,
    graphs: int = 150,
    loaded: tuple[list[tuple[str, Hypergraph]], list[tuple[str, Graph]]] | None = None,
) -> SuiteResult:
    res = SuiteResult("theorems")
    if loaded is None:
        hg_items = ((f"hypergraph-{i}", h) for i, h in enumerate(ca_hypergraph_corpus(seed, hypergraphs)))
        g_items = ((f"graph-{i}-{ident}", g) for i, (ident, g) in enumerate(pca_graph_corpus(seed + 1, graphs)))
    else:
        hg_items, g_items = loaded
    for inst, h in hg_items:
        res.instances += 1
        _check_hypergraph_theorems(res, inst, h)
    for inst, g in g_items:
        res.instances += 1
        _check_graph_theorems(res, inst, g)
    return res


def run_roundtrip_suite(
    seed: int = 0,
    count: int = 600,
    loaded: list[tuple[str, SharpArcModel | SharpIntervalModel]] | None = None,
) -> SuiteResult:
    res = SuiteResult("roundtrip")
    items = sharp_model_corpus(seed, count) if loaded is None else loaded
    for ident, model in items:
        res.instances += 1
        g = model_to_graph(model)
        order = geometric_order(model)
        if isinstance(model, SharpArcModel):
            from .graphs import universal_vertices

            if len(universal_vertices(g)) > 1:
                res.skip(ident, "more than one universal vertex")
                continue
            rec = reconstruct_arc(g, order)
            if not models_equal_up_to_symmetry(rec, model, allow_reflection=False):
                res.violate(ident, "arc-model-roundtrip-up-to-rotation", {"n": model.n})
        else:
            rec = reconstruct_interval(g, order)
            if rec != model:
                res.violate(ident, "interval-model-roundtrip-exact", {"n": model.n})
    return res


def _naive_circular(h: Hypergraph, tight: bool) -> set[tuple[int, ...]]:
    out = set()
    for perm in itertools.permutations(range(h.n)):
        o = CircularOrder(perm)
        if not is_arc_ordering(h, o):
            continue
        if tight and not is_tight_arc_ordering(h, o):
            continue
        out.add(canonical_circular(o))
    return out


def _naive_linear(h: Hypergraph, tight: bool) -> set[tuple[int, ...]]:
    out = set()
    for perm in itertools.permutations(range(h.n)):
        o = LinearOrder(perm)
        if not is_interval_ordering(h, o):
            continue
        if tight and not is_tight_interval_ordering(h, o):
            continue
        out.add(canonical_linear(o))
    return out


def run_oracle_suite(seed: int = 0, count: int = 120) -> SuiteResult:
    """Check the scan kernels against a direct itertools enumeration and
    against each other across backends."""
    res = SuiteResult("oracle")
    backends = kernels.available_backends()
    for i, h in enumerate(ca_hypergraph_corpus(seed, count, n_lo=4, n_hi=6)):
        inst = f"hypergraph-{i}"
        res.instances += 1
        for tight in (False, True):
            expected = len(_naive_circular(h, tight))
            pairs = tight_pairs(h, circular=True) if tight else ()
            for be in backends:
                keys = kernels.scan_circular(h.n, h.edges, pairs, tight, backend=be)
                if len(keys) != expected:
                    res.violate(
                        inst,
                        "kernel-matches-naive-enumeration",
                        {"backend": be, "tight": tight, "kernel": len(keys), "naive": expected},
                    )
            lin_expected = len(_naive_linear(h, tight))
            lin_pairs = tight_pairs(h, circular=False) if tight else ()
            for be in backends:
                keys = kernels.scan_linear(h.n, h.edges, lin_pairs, tight, backend=be)
                if len(keys) != lin_expected:
                    res.violate(
                        inst,
                        "linear-kernel-matches-naive-enumeration",
                        {"backend": be, "tight": tight, "kernel": len(keys), "naive": lin_expected},
                    )
    return res


SUITES = ("theorems", "roundtrip", "oracle")
