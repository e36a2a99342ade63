"""Translate-only pattern scans over lattice point sets."""

from dataclasses import dataclass
from typing import List, Tuple

from core.exceptions import SpecError
from polytope.lattice import LatticePointSet, Point, dilated_simplex


@dataclass(frozen=True)
class PatternMatch:
    offset: Point
    indices: Tuple[int, ...]


def two_delta(dim: int = 2) -> LatticePointSet:
    """Twice the standard simplex: the obstruction pattern for toric surfaces."""
    return dilated_simplex(dim, 2)


def scan_pattern(points: LatticePointSet, pattern: LatticePointSet) -> List[PatternMatch]:
    """
    Find every integer offset o with o + pattern contained in ``points``.

    Args:
        points: Lattice points to search.
        pattern: Pattern to translate.

    Returns:
        Matches sorted by offset, each with the matched indices into ``points``.
    """
    if points.dim != pattern.dim:
        raise SpecError(f"pattern dimension {pattern.dim} differs from point dimension {points.dim}")
    anchor = pattern.points[0]
    matches = []
    for p in points:
        offset = tuple(a - b for a, b in zip(p, anchor))
        shifted = [tuple(a + b for a, b in zip(q, offset)) for q in pattern]
        if all(q in points for q in shifted):
            matches.append(PatternMatch(offset, points.indices_of(shifted)))
    return sorted(matches, key=lambda m: m.offset)
