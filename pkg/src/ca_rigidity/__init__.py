"""Circular-arc hypergraph orderings and rigidity.

Core objects: ``Hypergraph`` with the overlap/intersection relations,
``CircularOrder``/``LinearOrder`` with arc/interval verification and
enumeration oracles, rigidity verdicts, graphs with their neighborhood
hypergraphs and recognition routines, and sharp intersection models with
reconstruction and orientations.
"""

from .errors import (
    AmbiguousDirectionError,
    CaRigidityError,
    EmptyHyperedgeError,
    InconsistentPlacementError,
    MalformedModelError,
    NotAnArcOrderingError,
    NotAnIntervalOrderingError,
    NotCircularArcError,
    NotRealizableError,
    ParseError,
    PreconditionViolatedError,
    RelationViolatedError,
    TooLargeError,
    TooManyUniversalVerticesError,
    UniversalVertexError,
    UniverseMismatchError,
)
from .hypergraph import (
    EdgeRelation,
    Hypergraph,
    RelationComponents,
    complement_hypergraph,
    intersects,
    is_relation_connected,
    is_twin_free,
    overlaps,
    relation_components,
    remove_vertex,
    strictly_intersects,
    strictly_overlaps,
    strip_trivial_hyperedges,
    twin_classes,
)
from .orders import (
    Arc,
    ArcKind,
    CircularOrder,
    Interval,
    LinearOrder,
    arc_of,
    canonical_circular,
    canonical_linear,
    interval_of,
    is_arc_ordering,
    is_interval_ordering,
    is_tight_arc_ordering,
    is_tight_interval_ordering,
    orders_equal_up_to_symmetry,
)
from .enumeration import (
    Mode,
    count_arc_ordering_classes,
    count_interval_ordering_classes,
    enumerate_arc_orderings,
    enumerate_interval_orderings,
    quilliot_unique,
    quilliot_witness,
)
from .extension import (
    CircleArc,
    PlacedArcSystem,
    extend_placement,
    place_strictly_overlap_connected,
    solve_arc_ordering,
)
from .rigidity import (
    CrossValidationReport,
    RigidityStatus,
    RigidityVerdict,
    arc_rigidity,
    cross_validate,
    interval_rigidity,
    tight_arc_rigidity,
)
from .graphs import (
    Graph,
    NeighborhoodArcs,
    NeighborhoodHypergraph,
    NrigidCase,
    NrigidVerdict,
    RecognitionResult,
    StructuralLemmaReport,
    check_structural_lemmas,
    closed_neighborhood_hypergraph,
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
    neighborhood_arcs,
    nrigid_verdict,
    open_neighborhood_hypergraph,
    recognize_pca,
    recognize_proper_interval,
    strict_connectedness_of_neighborhoods,
    theorem_ovconn_check,
    universal_vertices,
)
from .models import (
    Orientation,
    SharpArcModel,
    SharpIntervalModel,
    geometric_order,
    is_proper,
    is_round_enumeration,
    is_straight_enumeration,
    model_to_graph,
    models_equal_up_to_symmetry,
    random_sharp_arc_model,
    random_sharp_interval_model,
    reconstruct_arc,
    reconstruct_arc_from_graph,
    reconstruct_interval,
    reflect_model,
    rotate_model,
    round_orientation,
    sharpen_arcs,
    sharpen_intervals,
)

__version__ = "0.1.0"
