"""Core module for the surface walks toolkit.

This module provides the graph model and file formats, connectivity and
tree-packing tools, the exact walk and trail oracles, the reduction and
lifting machinery, toughness hypothesis checks, and surface embeddings.
"""

# Re-export the public API
from .certificates import (
    TRAIL,
    WALK,
    EulerianCertificate,
    certificate_from_traversal,
    certificate_to_traversal,
    is_valid_certificate,
    respects_caps,
    validate_certificate,
)
from .config import load_settings, save_setting
from .connectivity import (
    HalinCheck,
    HalinReport,
    cycle_through,
    is_contractible_edge,
    is_k_connected,
    is_minimally_3_connected,
    v3_vertices,
    verify_halin_properties,
    vertex_connectivity,
)
from .constants import *
from .deadline import check_deadline, remaining_ms, time_limit
from .errors import (
    AttachmentError,
    EdgeNotFoundError,
    GraphError,
    GraphTooLargeError,
    InternalError,
    LiftError,
    ParseError,
    PreconditionError,
    RotationFormatError,
    SearchTimeout,
    SerializationError,
    UnsupportedParameterError,
)
from .formats import (
    detect_format,
    iter_corpus,
    parse_corpus,
    parse_edge_instances,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    parse_sparse6,
    read_graphs,
    serialize_graph,
)
from .graph import (
    Edge,
    MultiGraph,
    VertexSet,
    as_vertex_set,
    canonical_hash,
    components,
    contract_edge,
    contract_vertex_set,
    contraction_map,
    count_components,
    delete_edge,
    delete_vertices,
    edges_within,
    induced_subgraph,
    is_connected,
    is_independent,
    normalize_edge,
    quotient_graph,
    relabel,
)
from .hypotheses import (
    HypothesisReport,
    check_trail_hypothesis,
    check_walk_hypothesis,
    construct_cut_walk,
    trail_bound_value,
    walk_bound_value,
)
from .lifting import lift_walk_over_edge, lift_walk_over_path
from .logger import logger
from .reduction import (
    BipartiteWitness,
    Reduction,
    ReductionTrace,
    TraceStep,
    high_degree_edge,
    low_degree_edge,
    maximal_high_degree_path,
    reduce_to_bipartite_witness,
    replay_trace,
)
from .surfaces import (
    BoundCheck,
    CutBoundReport,
    EmbeddingReport,
    SignedRotationSystem,
    conjecture_lower_bound,
    edge_bound_check,
    face_trace,
    min_euler_genus_bruteforce,
    parse_rotation,
    rotation_from_neighbours,
    serialize_rotation,
    trail_bound,
    trail_cut_bound,
    walk_bound,
    walk_cut_bound,
)
from .tree_packing import (
    TCPartition,
    TreePack,
    find_disjoint_spanning_trees,
    format_fraction,
    is_valid_tree_pack,
    nash_williams_check,
    omega_value,
    tree_connected_components,
)
from .walk_search import (
    find_bounded_walk,
    min_trail_number,
    min_walk_number,
    minimum_walk,
    resolve_caps,
)

__all__ = [
    # Constants
    "CONFIG_FILE",
    "DATA_ROOT",
    "DEFAULT_JOBS",
    "DEFAULT_MAX_K",
    "DEFAULT_TIMEOUT_MS",
    "FORMATS",
    "LOG_FILE",
    # Logger and settings
    "logger",
    "load_settings",
    "save_setting",
    # Errors
    "AttachmentError",
    "EdgeNotFoundError",
    "GraphError",
    "GraphTooLargeError",
    "InternalError",
    "LiftError",
    "ParseError",
    "PreconditionError",
    "RotationFormatError",
    "SearchTimeout",
    "SerializationError",
    "UnsupportedParameterError",
    # Deadlines
    "check_deadline",
    "remaining_ms",
    "time_limit",
    # Graphs
    "Edge",
    "MultiGraph",
    "VertexSet",
    "as_vertex_set",
    "canonical_hash",
    "components",
    "contract_edge",
    "contract_vertex_set",
    "contraction_map",
    "count_components",
    "delete_edge",
    "delete_vertices",
    "edges_within",
    "induced_subgraph",
    "is_connected",
    "is_independent",
    "normalize_edge",
    "quotient_graph",
    "relabel",
    # Formats
    "detect_format",
    "iter_corpus",
    "parse_corpus",
    "parse_edge_instances",
    "parse_edge_list",
    "parse_graph",
    "parse_graph6",
    "parse_sparse6",
    "read_graphs",
    "serialize_graph",
    # Connectivity
    "HalinCheck",
    "HalinReport",
    "cycle_through",
    "is_contractible_edge",
    "is_k_connected",
    "is_minimally_3_connected",
    "v3_vertices",
    "verify_halin_properties",
    "vertex_connectivity",
    # Tree packing
    "TCPartition",
    "TreePack",
    "find_disjoint_spanning_trees",
    "format_fraction",
    "is_valid_tree_pack",
    "nash_williams_check",
    "omega_value",
    "tree_connected_components",
    # Walks and trails
    "TRAIL",
    "WALK",
    "EulerianCertificate",
    "certificate_from_traversal",
    "certificate_to_traversal",
    "is_valid_certificate",
    "respects_caps",
    "validate_certificate",
    "find_bounded_walk",
    "min_trail_number",
    "min_walk_number",
    "minimum_walk",
    "resolve_caps",
    "lift_walk_over_edge",
    "lift_walk_over_path",
    "BipartiteWitness",
    "Reduction",
    "ReductionTrace",
    "TraceStep",
    "high_degree_edge",
    "low_degree_edge",
    "maximal_high_degree_path",
    "reduce_to_bipartite_witness",
    "replay_trace",
    "HypothesisReport",
    "check_trail_hypothesis",
    "check_walk_hypothesis",
    "construct_cut_walk",
    "trail_bound_value",
    "walk_bound_value",
    # Surfaces
    "BoundCheck",
    "CutBoundReport",
    "EmbeddingReport",
    "SignedRotationSystem",
    "conjecture_lower_bound",
    "edge_bound_check",
    "face_trace",
    "min_euler_genus_bruteforce",
    "parse_rotation",
    "rotation_from_neighbours",
    "serialize_rotation",
    "trail_bound",
    "trail_cut_bound",
    "walk_bound",
    "walk_cut_bound",
]
