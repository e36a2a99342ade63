"""Algebraic matroids of varieties and joins, and the Terracini-union check."""

from terracini.config import MatroidComputationConfig
from terracini.golden import GOLDEN, golden_names, run_golden
from terracini.models import (
    ConeReport,
    DefectReport,
    GoldenReport,
    JoinReport,
    MatroidReport,
    PartitionReport,
    SandwichReport,
    ScanReport,
    SubsetRankReport,
    UnionCheckReport,
)
from terracini.oracle import JacobianRankOracle
from terracini.service import TerraciniService

__all__ = [
    "ConeReport",
    "DefectReport",
    "GOLDEN",
    "GoldenReport",
    "JacobianRankOracle",
    "JoinReport",
    "MatroidComputationConfig",
    "MatroidReport",
    "PartitionReport",
    "SandwichReport",
    "ScanReport",
    "SubsetRankReport",
    "TerraciniService",
    "UnionCheckReport",
    "golden_names",
    "run_golden",
]
