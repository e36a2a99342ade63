"""
Jacobian assembly.

Rows are parameters, columns are coordinates. By Terracini's lemma the column
matroid of the stacked Jacobian at generic points is the algebraic matroid of
the join.
"""

from functools import lru_cache, singledispatch
from typing import Sequence, Tuple

from core.exceptions import SpecError
from exactlin.matrix import ExactMatrix, stack
from exactlin.polynomial import SparsePolynomial
from exactlin.scalars import PrimeField
from geometry.specs import JoinSpec, LinearChangeSpec, PolyMapSpec, ToricSpec


@lru_cache(maxsize=256)
def _partials(spec: PolyMapSpec) -> Tuple[Tuple[SparsePolynomial, ...], ...]:
    """partials[j][i] = d f_i / d x_j."""
    return tuple(
        tuple(f.partial(j) for f in spec.components)
        for j in range(spec.n_params)
    )


def _check_point(spec, point: Sequence[int]):
    if len(point) != spec.n_params:
        raise SpecError(f"point has {len(point)} coordinates, expected {spec.n_params}")


@singledispatch
def jacobian_at(spec, point: Sequence[int], field: PrimeField) -> ExactMatrix:
    """Evaluate the (params x N) Jacobian of ``spec`` at ``point`` over ``field``."""
    raise SpecError(f"cannot take the Jacobian of {type(spec).__name__}")


@jacobian_at.register
def _(spec: ToricSpec, point: Sequence[int], field: PrimeField) -> ExactMatrix:
    _check_point(spec, point)
    point = [field.reduce(v) for v in point]
    if any(v == 0 for v in point):
        raise SpecError("toric parameters must be nonzero")
    inverses = [field.inverse(v) for v in point]
    columns = spec.columns
    monomials = []
    for column in columns:
        value = 1
        for t, e in zip(point, column):
            value = value * field.power(t, e) % field.modulus
        monomials.append(value)
    rows = [
        [column[j] * m % field.modulus * inverses[j] % field.modulus for column, m in zip(columns, monomials)]
        for j in range(spec.n_params)
    ]
    return ExactMatrix.prime_field(rows, field.modulus, ncols=spec.n_coords)


@jacobian_at.register
def _(spec: PolyMapSpec, point: Sequence[int], field: PrimeField) -> ExactMatrix:
    _check_point(spec, point)
    rows = [[d.evaluate_mod(point, field) for d in row] for row in _partials(spec)]
    return ExactMatrix.prime_field(rows, field.modulus, ncols=spec.n_coords)


@jacobian_at.register
def _(spec: LinearChangeSpec, point: Sequence[int], field: PrimeField) -> ExactMatrix:
    return jacobian_at(spec.polymap, point, field)


def join_jacobian_at(join: JoinSpec, points: Sequence[Sequence[int]], field: PrimeField) -> ExactMatrix:
    """Stack the summand Jacobians, one block of rows per summand."""
    if len(points) != join.s:
        raise SpecError(f"need {join.s} points, got {len(points)}")
    return stack([jacobian_at(spec, point, field) for spec, point in zip(join.summands, points)])


@singledispatch
def symbolic_jacobian(spec) -> ExactMatrix:
    """Polynomial Jacobian, rank-equivalent to the generic evaluated one."""
    raise SpecError(f"cannot take the Jacobian of {type(spec).__name__}")


@symbolic_jacobian.register
def _(spec: ToricSpec) -> ExactMatrix:
    # Row j is multiplied by t_j, and everything by a monomial that clears
    # negative exponents. Neither changes the column matroid.
    matrix = spec.matrix
    shift = [max(0, -min(row)) for row in matrix]
    columns = spec.columns
    rows = []
    for j in range(spec.n_params):
        rows.append([
            SparsePolynomial.monomial([e + c for e, c in zip(column, shift)], column[j])
            for column in columns
        ])
    return ExactMatrix.polynomial(rows, ncols=spec.n_coords)


@symbolic_jacobian.register
def _(spec: PolyMapSpec) -> ExactMatrix:
    return ExactMatrix.polynomial(_partials(spec), ncols=spec.n_coords)


@symbolic_jacobian.register
def _(spec: LinearChangeSpec) -> ExactMatrix:
    return symbolic_jacobian(spec.polymap)


def symbolic_join_jacobian(join: JoinSpec) -> ExactMatrix:
    """Stacked symbolic Jacobian; each summand gets its own block of variables."""
    blocks = [symbolic_jacobian(spec) for spec in join.summands]
    total = sum(spec.n_params for spec in join.summands)
    offset = 0
    shifted = []
    for spec, block in zip(join.summands, blocks):
        shifted.append(ExactMatrix.polynomial(
            [[p.shift_variables(offset, total) for p in row] for row in block.entries],
            ncols=block.ncols,
        ))
        offset += spec.n_params
    return stack(shifted)
