"""Exact computation toolkit for global coalition partitions in graphs.

Verifies and constructs gc/c/prc-partitions, computes the associated maxima
(GC, C, PRC) and domination invariants by pruned exhaustive search, and
cross-validates closed forms over named graph families and enumerated
corpora.  Everything is exact and deterministic; the only scale knob is the
solver node budget.
"""

__version__ = "0.1.0"

from .bitset import VertexSet, bits_of, mask_of
from .coalition import (
    CoalitionGraph,
    Partition,
    PartitionVerdict,
    Reason,
    Violation,
    build_gcg,
    count_gc_partners,
    gc_partner_bound,
    is_c_pair,
    is_gc_pair,
    is_prc_pair,
    verify_partition,
)
from .domination import (
    DomaticWitness,
    DominationReport,
    MinSet,
    at_most_one_neighbor,
    gamma,
    gamma_g,
    global_domatic,
    is_dominating,
    is_global_dominating,
    is_perfect_dominating,
    minimal_gds_within,
)
from .errors import (
    DisconnectedError,
    GcoalitionError,
    GraphFormatError,
    InvalidParamsError,
    MalformedPartitionError,
    NoKnownConstructionError,
    NoKnownFormulaError,
    NotATreeError,
    NotGlobalDominatingError,
    OverlappingSetsError,
    TrivialGraphError,
)
from .families import (
    FamilySpec,
    LowerBound,
    T1Membership,
    T2Membership,
    closed_form_gc,
    connected_graphs,
    enumerate_trees,
    enumerate_unicyclic,
    generate,
    girth_at_least_6_graphs,
    is_T1_or_T2,
    parse_spec,
    proof_partition,
    spec,
)
from .graph import (
    ACYCLIC,
    Graph,
    Metrics,
    StructureReport,
    classify_radius2_tree,
    from_edge_list,
    is_tree,
    metrics,
    structure,
)
from .graphio import from_graph6, parse_edge_list, to_dot, to_edge_list, to_graph6
from .iso import IsoDedup, are_isomorphic, canonical_hash
from .solvers import (
    DEFAULT_BUDGET,
    SolveResult,
    construct_center_partition,
    construct_gc_from_domatic,
    max_partition,
)

__all__ = [
    "ACYCLIC",
    "CoalitionGraph",
    "DEFAULT_BUDGET",
    "DisconnectedError",
    "DomaticWitness",
    "DominationReport",
    "FamilySpec",
    "GcoalitionError",
    "Graph",
    "GraphFormatError",
    "InvalidParamsError",
    "IsoDedup",
    "LowerBound",
    "MalformedPartitionError",
    "Metrics",
    "MinSet",
    "NoKnownConstructionError",
    "NoKnownFormulaError",
    "NotATreeError",
    "NotGlobalDominatingError",
    "OverlappingSetsError",
    "Partition",
    "PartitionVerdict",
    "Reason",
    "SolveResult",
    "StructureReport",
    "T1Membership",
    "T2Membership",
    "TrivialGraphError",
    "VertexSet",
    "Violation",
    "are_isomorphic",
    "at_most_one_neighbor",
    "bits_of",
    "build_gcg",
    "canonical_hash",
    "classify_radius2_tree",
    "closed_form_gc",
    "connected_graphs",
    "construct_center_partition",
    "construct_gc_from_domatic",
    "count_gc_partners",
    "enumerate_trees",
    "enumerate_unicyclic",
    "from_edge_list",
    "from_graph6",
    "gamma",
    "gamma_g",
    "gc_partner_bound",
    "generate",
    "girth_at_least_6_graphs",
    "global_domatic",
    "is_c_pair",
    "is_dominating",
    "is_gc_pair",
    "is_global_dominating",
    "is_perfect_dominating",
    "is_prc_pair",
    "is_T1_or_T2",
    "is_tree",
    "mask_of",
    "max_partition",
    "metrics",
    "minimal_gds_within",
    "parse_edge_list",
    "parse_spec",
    "proof_partition",
    "spec",
    "structure",
    "to_dot",
    "to_edge_list",
    "to_graph6",
    "verify_partition",
]
