"""Deciders, certificates and an audit harness for two-biclique vertex partitions."""

from .audit import AuditReport, ClaimResult, audit, safe_acceptance_check, star_poly_cross_check
from .certificates import (
    Certificate,
    Member,
    NonMember,
    SafeSequence,
    SafeSequenceFailure,
    Uncertifiable,
    check_bp2_cert,
    dual_certify,
    format_certificate,
    gen_safe_sequence,
    parse_certificate,
    verify_nbp2,
)
from .deciders import (
    decide_bp2,
    is_bp1,
    nbp2_necessary,
    part_is_biclique,
    part_is_star,
    star_biclique_poly,
)
from .graphs import CapacityError, Graph, make_graph
from .graphio import (
    canonical_g6,
    edgelist_emit,
    edgelist_parse,
    enumerate_labeled,
    g6_decode,
    g6_encode,
    graph_from_index,
    labeled_graph_count,
    named,
    random_graph,
)
from .oracle import (
    DeletionDepthReport,
    bp1_oracle,
    bp2_oracle,
    deletion_depths,
    disconnected_vertex_cuts,
    first_unsafe_prefix,
    max_bp1_split,
    max_bp2_subset,
    safe_check,
    star_biclique_oracle,
)
from .witnesses import StarBicliqueWitness, TwoBicliquePartition, partition_error, star_witness_error

__all__ = [
    "AuditReport",
    "CapacityError",
    "Certificate",
    "ClaimResult",
    "DeletionDepthReport",
    "Graph",
    "Member",
    "NonMember",
    "SafeSequence",
    "SafeSequenceFailure",
    "StarBicliqueWitness",
    "TwoBicliquePartition",
    "Uncertifiable",
    "audit",
    "bp1_oracle",
    "bp2_oracle",
    "canonical_g6",
    "check_bp2_cert",
    "decide_bp2",
    "deletion_depths",
    "disconnected_vertex_cuts",
    "dual_certify",
    "edgelist_emit",
    "edgelist_parse",
    "enumerate_labeled",
    "first_unsafe_prefix",
    "format_certificate",
    "g6_decode",
    "g6_encode",
    "gen_safe_sequence",
    "graph_from_index",
    "is_bp1",
    "labeled_graph_count",
    "make_graph",
    "max_bp1_split",
    "max_bp2_subset",
    "named",
    "nbp2_necessary",
    "parse_certificate",
    "part_is_biclique",
    "part_is_star",
    "partition_error",
    "random_graph",
    "safe_acceptance_check",
    "safe_check",
    "star_biclique_oracle",
    "star_biclique_poly",
    "star_poly_cross_check",
    "star_witness_error",
    "verify_nbp2",
]
