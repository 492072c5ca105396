"""Exact desk-scale toolkit for rainbow vertex-connection of graphs."""

from ._backend import backend_name
from .errors import FormatError, InconsistencyError, RvckitError, SizeLimitError, ValidationError
from .graphs import (
    MAX_PALETTE,
    ColoredGraph,
    Coloring,
    Graph,
    GraphMetrics,
    adjacency,
    adjacency_bits,
    all_pairs_distances,
    build_coloring,
    build_graph,
    colored_graph,
    graph_metrics,
    is_connected,
    parse_colored_graph,
    parse_instance,
    serialize_colored_graph,
    serialize_instance,
)
from .harness import (
    SuiteReport,
    enumerate_connected_graphs,
    enumerate_small_cnf,
    unsat_full_sign_formula,
    verify_reduction,
)
from .paths import (
    CheckVerdict,
    PathVerdict,
    check_pairs,
    check_rainbow_vertex_connected,
    find_rainbow_path,
    is_rainbow_path,
    naive_all_paths_check,
)
from .reductions import (
    ReductionCertificate,
    decode_diffpairs_witness,
    decode_st_witness,
    decoded_satisfies,
    diffpairs_to_subset,
    parse_certificate,
    sat_to_diffpairs,
    sat_to_st,
    serialize_certificate,
    st_to_global,
    subset_to_rvc2,
)
from .sat import (
    BRUTE_FORCE_MAX_VARS,
    CnfFormula,
    NormalizeResult,
    SatVerdict,
    brute_force_sat,
    build_formula,
    evaluate,
    is_normalized,
    normalize,
    occurrence_profile,
    parse_dimacs,
    to_dimacs,
)
from .solve import (
    Bounds,
    ColoringVerdict,
    Pairing,
    build_pairing,
    decide_diffpairs_rvc2,
    decide_rvc_le_k,
    decide_subset_rvc2,
    rvc_bounds,
    rvc_exact,
)

__version__ = "0.1.0"

__all__ = [
    "BRUTE_FORCE_MAX_VARS",
    "Bounds",
    "CheckVerdict",
    "CnfFormula",
    "ColoredGraph",
    "Coloring",
    "ColoringVerdict",
    "FormatError",
    "Graph",
    "GraphMetrics",
    "InconsistencyError",
    "MAX_PALETTE",
    "NormalizeResult",
    "Pairing",
    "PathVerdict",
    "ReductionCertificate",
    "RvckitError",
    "SatVerdict",
    "SizeLimitError",
    "SuiteReport",
    "ValidationError",
    "adjacency",
    "adjacency_bits",
    "all_pairs_distances",
    "backend_name",
    "brute_force_sat",
    "build_coloring",
    "build_formula",
    "build_graph",
    "build_pairing",
    "check_pairs",
    "check_rainbow_vertex_connected",
    "colored_graph",
    "decide_diffpairs_rvc2",
    "decide_rvc_le_k",
    "decide_subset_rvc2",
    "decode_diffpairs_witness",
    "decode_st_witness",
    "decoded_satisfies",
    "diffpairs_to_subset",
    "enumerate_connected_graphs",
    "enumerate_small_cnf",
    "evaluate",
    "find_rainbow_path",
    "graph_metrics",
    "is_connected",
    "is_normalized",
    "is_rainbow_path",
    "naive_all_paths_check",
    "normalize",
    "occurrence_profile",
    "parse_certificate",
    "parse_colored_graph",
    "parse_dimacs",
    "parse_instance",
    "rvc_bounds",
    "rvc_exact",
    "sat_to_diffpairs",
    "sat_to_st",
    "serialize_certificate",
    "serialize_colored_graph",
    "serialize_instance",
    "st_to_global",
    "subset_to_rvc2",
    "to_dimacs",
    "unsat_full_sign_formula",
    "verify_reduction",
]
