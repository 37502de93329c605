"""Rare-event path relations on edge-labeled phylogenetic trees.

Thin re-export of the compiled core. Trees are opaque handles with Newick
and DOT serializers; relations are built from Python lists or parsed from
the TSV exchange format.
"""

from ._core import (
    Error,
    Relation,
    Tree,
    admissible_centers,
    at_least_k_pairs,
    brute_force_explainers,
    check,
    close_triples,
    directed1_pairs,
    enumerate_binary,
    explains,
    infer,
    infer_rooted,
    make_least_resolved,
    parse_newick,
    parse_relation,
    path_triples,
    reconstruct_mixed,
    single1_pairs,
    zero_classes,
)

__all__ = [
    "Error",
    "Relation",
    "Tree",
    "admissible_centers",
    "at_least_k_pairs",
    "brute_force_explainers",
    "check",
    "close_triples",
    "directed1_pairs",
    "enumerate_binary",
    "explains",
    "infer",
    "infer_rooted",
    "make_least_resolved",
    "parse_newick",
    "parse_relation",
    "path_triples",
    "reconstruct_mixed",
    "single1_pairs",
    "zero_classes",
]
