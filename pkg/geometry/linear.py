"""Linear changes of coordinates."""

import logging
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from config.settings import get_settings
from core.exceptions import SpecError
from exactlin.matrix import ExactMatrix
from exactlin.polynomial import polynomial_sum
from exactlin.rank import rank_rational
from exactlin.scalars import to_fraction
from geometry.specs import LinearChangeSpec, PolyMapSpec, VarietySpec

logger = logging.getLogger(__name__)

RationalRows = Sequence[Sequence[Union[int, str, Fraction]]]


def random_invertible_matrix(n: int, seed: int, height: Optional[int] = None) -> Tuple[Tuple[Fraction, ...], ...]:
    """
    Seeded invertible integer matrix with entries in [-height, height].

    The same (n, seed, height) always yields the same matrix.
    """
    height = get_settings().linear_change_height if height is None else height
    if height < 1:
        raise SpecError(f"entry height must be positive, got {height}")
    rng = np.random.default_rng(seed)
    attempts = 0
    while True:
        attempts += 1
        draw = rng.integers(-height, height + 1, size=(n, n))
        rows = tuple(tuple(Fraction(int(v)) for v in row) for row in draw)
        if rank_rational(ExactMatrix.rational(rows, ncols=n)) == n:
            logger.debug("invertible %dx%d change found after %d draws (seed %d)", n, n, attempts, seed)
            return rows


def compose_linear(spec: VarietySpec, change: Union[LinearChangeSpec, RationalRows]) -> PolyMapSpec:
    """
    Apply ``change`` to the coordinate functions of ``spec``.

    Coordinate i of the result is sum_j L[i][j] * f_j. Labels carry over.

    Raises:
        SpecError: if the matrix is not square of the right size or is singular.
    """
    matrix = change.matrix if isinstance(change, LinearChangeSpec) else change
    rows = [[to_fraction(v) for v in row] for row in matrix]
    n = spec.n_coords
    if len(rows) != n or any(len(row) != n for row in rows):
        raise SpecError(f"linear change must be {n} x {n}")
    if rank_rational(ExactMatrix.rational(rows, ncols=n)) != n:
        raise SpecError("linear change is not invertible")

    inner = spec.to_polymap()
    components = tuple(
        polynomial_sum(
            (f.scale(c) for c, f in zip(row, inner.components) if c != 0),
            inner.n_params,
        )
        for row in rows
    )
    return PolyMapSpec(inner.variables, components, inner.labels, name=getattr(spec, "name", None))
