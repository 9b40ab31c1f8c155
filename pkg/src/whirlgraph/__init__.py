"""Finite truncations of the whirl and Farey graphs, edge-disjoint
order-compatible path systems, and machine checks of their structure."""

from .cantorminor import (
    MIDDLE_NINTH_LEFT,
    MIDDLE_NINTH_RIGHT,
    AffineMap,
    AssemblyResult,
    Interval,
    affine_image,
    cantor_intervals,
    cantor_subgraph,
    farey_minor_assembly,
    halved_farey_iso,
)
from .core import (
    ONE,
    ZERO,
    FareyFraction,
    Graph,
    Matching,
    Path,
    RationalLabel,
    TriadicRational,
    VertexMap,
    contract,
    dumps_canonical,
    graph_from_json,
    graph_to_json,
    is_separation,
    parse_label,
    triadic_make,
    verify_iso,
    vertex_key,
    vertex_str,
)
from .errors import (
    BudgetExceededError,
    CoverageError,
    DomainError,
    FractionError,
    GraphError,
    InfeasibilityError,
    MapError,
    MatchingError,
    NotAnEdgeError,
    OrientationError,
    PathSystemError,
    PreconditionError,
    RangeError,
    StructureError,
    VertexError,
    WhirlgraphError,
)
from .farey import (
    ColoredGraph,
    SternBrocotReport,
    blue_order,
    farey_adjacent,
    farey_graph,
    halved_farey,
    mediant,
    stern_brocot_check,
)
from .pathsys import (
    PathSystem,
    SystemReport,
    first_incompatible_witness,
    max_edge_disjoint,
    min_edge_system,
    order_compatible,
    random_edge_disjoint_system,
    uncross,
    validate_system,
)
from .ubiquity import (
    Refutation,
    ZigzagWitness,
    all_paths,
    exists_compatible_bruteforce,
    minimal_containment_level,
    refute_compatibility,
    zigzag_window,
)
from .whirl import (
    IntervalTraversalReport,
    LevelWindow,
    check_interval_traversal,
    cutvertex_split,
    edge_level,
    graph_upto,
    hamilton_path,
    level_edges,
    level_graph,
    level_vertices,
    whirl_dot,
    whirl_graph,
)

__version__ = "0.1.0"
