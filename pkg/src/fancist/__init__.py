"""Two completely independent spanning trees for graphs with mu2(G) >= n."""

from .cist import (
    CistPartition,
    TreePair,
    Verdict,
    is_cist_partition,
    partition_to_trees,
    verify_cists_definitional,
    verify_cists_leafrule,
)
from .constructor import BRANCHES, ConstructionTrace, FanContext, construct
from .errors import (
    CistError,
    InternalInvariantViolation,
    NotACistPartition,
    NotASpanningTree,
    ParseError,
    PreconditionFailed,
)
from .graph import INF, Graph, condition_report, format_edge_list, mu2, parse_edge_list, sigma2, vertex_connectivity
from .oracle import GenSpec, OracleResult, fan_random, generate, oracle_2cist_partition, sharpness_graph

__version__ = "0.1.0"

__all__ = [
    "BRANCHES",
    "CistError",
    "CistPartition",
    "ConstructionTrace",
    "FanContext",
    "GenSpec",
    "Graph",
    "INF",
    "InternalInvariantViolation",
    "NotACistPartition",
    "NotASpanningTree",
    "OracleResult",
    "ParseError",
    "PreconditionFailed",
    "TreePair",
    "Verdict",
    "condition_report",
    "construct",
    "fan_random",
    "format_edge_list",
    "generate",
    "is_cist_partition",
    "mu2",
    "oracle_2cist_partition",
    "parse_edge_list",
    "partition_to_trees",
    "sharpness_graph",
    "sigma2",
    "verify_cists_definitional",
    "verify_cists_leafrule",
    "vertex_connectivity",
]
