"""
Rank-oracle matroids, unions and the weak order.
"""

from matroid.base import GroundSet, Matroid, Provenance, loops_and_coloops
from matroid.constructors import column_matroid, complete_graph_edges, explicit, graphic, uniform
from matroid.order import weak_order_leq, weak_order_strict
from matroid.union import (
    MatroidPartitioner,
    PartitionCertificate,
    PartitionFailure,
    matroid_union,
    partition_certificate,
    self_union,
    union_rank_bruteforce,
)

__all__ = [
    "GroundSet",
    "Matroid",
    "Provenance",
    "loops_and_coloops",
    "column_matroid",
    "complete_graph_edges",
    "explicit",
    "graphic",
    "uniform",
    "weak_order_leq",
    "weak_order_strict",
    "MatroidPartitioner",
    "PartitionCertificate",
    "PartitionFailure",
    "matroid_union",
    "partition_certificate",
    "self_union",
    "union_rank_bruteforce",
]
