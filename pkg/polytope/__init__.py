"""Lattice point utilities and obstruction scans for toric varieties."""

from polytope.lattice import (
    LatticePointSet,
    dilated_simplex,
    grid,
    hull_points,
    product,
    toric_from_points,
    translate,
)
from polytope.scan import PatternMatch, scan_pattern, two_delta

__all__ = [
    "LatticePointSet",
    "PatternMatch",
    "dilated_simplex",
    "grid",
    "hull_points",
    "product",
    "scan_pattern",
    "toric_from_points",
    "translate",
    "two_delta",
]
