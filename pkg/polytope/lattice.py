"""
Lattice point sets of small lattice polytopes.

Points are kept distinct and lexicographically sorted; that order is the
coordinate order of the toric spec built from them.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from core.exceptions import SpecError
from exactlin.rank import solve_rational
from geometry.specs import ToricSpec

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]

MAX_HULL_DIM = 3


@dataclass(frozen=True)
class LatticePointSet:
    """A finite set of integer points in Z^dim."""

    dim: int
    points: Tuple[Point, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise SpecError(f"dimension must be positive, got {self.dim}")
        points = sorted({tuple(int(v) for v in p) for p in self.points})
        for p in points:
            if len(p) != self.dim:
                raise SpecError(f"point {p} does not have dimension {self.dim}")
        object.__setattr__(self, "points", tuple(points))

    @classmethod
    def of(cls, points: Iterable[Sequence[int]]) -> "LatticePointSet":
        points = [tuple(p) for p in points]
        if not points:
            raise SpecError("a point set needs at least one point to fix its dimension")
        return cls(len(points[0]), tuple(points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, point) -> bool:
        return tuple(point) in self._index

    @cached_property
    def _index(self) -> dict:
        return {p: i for i, p in enumerate(self.points)}

    def index_of(self, point: Sequence[int]) -> int:
        try:
            return self._index[tuple(point)]
        except KeyError:
            raise SpecError(f"{tuple(point)} is not in the point set") from None

    def indices_of(self, points: Iterable[Sequence[int]]) -> Tuple[int, ...]:
        index = self._index
        try:
            return tuple(sorted(index[tuple(p)] for p in points))
        except KeyError as e:
            raise SpecError(f"{e.args[0]} is not in the point set") from None

    def as_array(self) -> np.ndarray:
        return np.array(self.points, dtype=np.int64).reshape(len(self.points), self.dim)

    def translate(self, offset: Sequence[int]) -> "LatticePointSet":
        return translate(self, offset)


def dilated_simplex(n: int, d: int) -> LatticePointSet:
    """All nonnegative integer vectors in Z^n with coordinate sum at most d."""
    if n < 1 or d < 0:
        raise SpecError(f"invalid simplex dimension {n} or degree {d}")
    points = [p for p in itertools.product(range(d + 1), repeat=n) if sum(p) <= d]
    return LatticePointSet(n, tuple(points))


def grid(box: Sequence[int]) -> LatticePointSet:
    """The box [0, b_1] x ... x [0, b_k]."""
    if not box or any(b < 0 for b in box):
        raise SpecError(f"box bounds must be nonnegative, got {list(box)}")
    return LatticePointSet(len(box), tuple(itertools.product(*(range(b + 1) for b in box))))


def product(*factors: LatticePointSet) -> LatticePointSet:
    """Cartesian product, coordinates concatenated in factor order."""
    if not factors:
        raise SpecError("product needs at least one factor")
    dim = sum(f.dim for f in factors)
    points = (sum(combo, ()) for combo in itertools.product(*(f.points for f in factors)))
    return LatticePointSet(dim, tuple(points))


def translate(points: LatticePointSet, offset: Sequence[int]) -> LatticePointSet:
    offset = tuple(int(v) for v in offset)
    if len(offset) != points.dim:
        raise SpecError(f"offset {offset} does not have dimension {points.dim}")
    return LatticePointSet(points.dim, tuple(tuple(a + b for a, b in zip(p, offset)) for p in points))


def _in_hull(point: Point, vertices: List[Point], dim: int) -> bool:
    # Caratheodory: some affinely independent vertex subset carries the point.
    rhs = [Fraction(v) for v in point] + [Fraction(1)]
    for size in range(1, min(len(vertices), dim + 1) + 1):
        for subset in itertools.combinations(vertices, size):
            matrix = [[Fraction(v[k]) for v in subset] for k in range(dim)]
            matrix.append([Fraction(1)] * size)
            weights = solve_rational(matrix, rhs)
            if weights is not None and all(w >= 0 for w in weights):
                return True
    return False


def hull_points(vertices: Sequence[Sequence[int]]) -> LatticePointSet:
    """
    Lattice points of the convex hull of ``vertices``.

    Membership is decided exactly; candidates range over the bounding box.

    Raises:
        SpecError: for an empty vertex list, mixed dimensions, or dim > 3.
    """
    verts = sorted({tuple(int(v) for v in p) for p in vertices})
    if not verts:
        raise SpecError("hull needs at least one vertex")
    dim = len(verts[0])
    if any(len(v) != dim for v in verts):
        raise SpecError("hull vertices must share a dimension")
    if dim > MAX_HULL_DIM:
        raise SpecError(f"hull enumeration supports dimension at most {MAX_HULL_DIM}, got {dim}")

    array = np.array(verts, dtype=np.int64)
    low, high = array.min(axis=0), array.max(axis=0)
    box = itertools.product(*(range(int(a), int(b) + 1) for a, b in zip(low, high)))
    points = [p for p in box if _in_hull(p, verts, dim)]
    logger.debug("hull of %d vertices has %d lattice points", len(verts), len(points))
    return LatticePointSet(dim, tuple(points))


def toric_from_points(
    points: LatticePointSet,
    homogenize: bool = True,
    labels: Optional[Sequence[str]] = None,
    name: Optional[str] = None
) -> ToricSpec:
    """One column per point, in sorted order; rows are the point coordinates."""
    if not len(points):
        raise SpecError("no lattice points")
    exponents = tuple(tuple(p[k] for p in points) for k in range(points.dim))
    return ToricSpec(exponents, homogenize=homogenize, labels=tuple(labels) if labels else None, name=name)
