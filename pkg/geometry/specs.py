"""
Variety specifications.

Every spec parametrizes an affine cone in A^N. ``ToricSpec`` and ``PolyMapSpec``
are parametrizations; ``LinearChangeSpec`` applies an invertible linear map to
the coordinates of another spec; ``JoinSpec`` lists the summands of a join.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence, Tuple, Union

from core.exceptions import SpecError
from exactlin.parser import parse_poly
from exactlin.polynomial import SparsePolynomial
from exactlin.scalars import to_fraction
from matroid.base import GroundSet

logger = logging.getLogger(__name__)


def _labels(labels: Optional[Sequence[str]], size: int) -> Tuple[str, ...]:
    if labels is None:
        return GroundSet.default(size).labels
    labels = tuple(labels)
    if len(labels) != size:
        raise SpecError(f"expected {size} coordinate labels, got {len(labels)}")
    GroundSet(labels)
    return labels


@dataclass(frozen=True)
class ToricSpec:
    """
    Monomial parametrization t -> (t^{a_1}, ..., t^{a_N}).

    ``exponents`` is the d x N exponent matrix (rows = torus parameters). With
    ``homogenize`` a row of ones is appended, whose parameter is the last one.
    """

    exponents: Tuple[Tuple[int, ...], ...]
    homogenize: bool = True
    labels: Optional[Tuple[str, ...]] = None
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.exponents)
        if not rows or not rows[0]:
            raise SpecError("exponent matrix must be nonempty")
        if any(len(row) != len(rows[0]) for row in rows):
            raise SpecError("exponent matrix rows must have equal length")
        object.__setattr__(self, "exponents", rows)
        object.__setattr__(self, "labels", _labels(self.labels, len(rows[0])))
        duplicates = self.duplicate_columns()
        if duplicates:
            logger.warning("toric spec has repeated columns %s (parallel elements)", duplicates)

    @property
    def n_coords(self) -> int:
        return len(self.exponents[0])

    @property
    def n_params(self) -> int:
        return len(self.exponents) + (1 if self.homogenize else 0)

    @property
    def matrix(self) -> Tuple[Tuple[int, ...], ...]:
        """Exponent matrix with the homogenizing row applied."""
        if self.homogenize:
            return self.exponents + ((1,) * self.n_coords,)
        return self.exponents

    @property
    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(zip(*self.matrix))

    @property
    def ground(self) -> GroundSet:
        return GroundSet(self.labels)

    def duplicate_columns(self) -> list:
        seen = {}
        pairs = []
        for i, column in enumerate(zip(*self.matrix)):
            if column in seen:
                pairs.append((seen[column], i))
            else:
                seen[column] = i
        return pairs

    def has_negative_exponents(self) -> bool:
        return any(v < 0 for row in self.exponents for v in row)

    def to_polymap(self) -> "PolyMapSpec":
        """Expand into polynomial coordinate functions (nonnegative exponents only)."""
        if self.has_negative_exponents():
            raise SpecError("Laurent monomials cannot be expanded to polynomials")
        names = [f"t{j + 1}" for j in range(len(self.exponents))]
        if self.homogenize:
            names.append("t0")
        components = tuple(SparsePolynomial.monomial(column) for column in self.columns)
        return PolyMapSpec(tuple(names), components, self.labels, name=self.name)


@dataclass(frozen=True)
class PolyMapSpec:
    """Polynomial parametrization x -> (f_1(x), ..., f_N(x)) over Q."""

    variables: Tuple[str, ...]
    components: Tuple[SparsePolynomial, ...]
    labels: Optional[Tuple[str, ...]] = None
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise SpecError("a polynomial map needs at least one component")
        if len(set(self.variables)) != len(self.variables):
            raise SpecError(f"duplicate parameter names {list(self.variables)}")
        for poly in self.components:
            if poly.nvars != len(self.variables):
                raise SpecError("every component must use the declared parameters")
        if all(poly.is_zero() for poly in self.components):
            raise SpecError("a polynomial map needs a nonzero component")
        object.__setattr__(self, "labels", _labels(self.labels, len(self.components)))

    @classmethod
    def from_text(
        cls,
        variables: Sequence[str],
        components: Sequence[str],
        labels: Optional[Sequence[str]] = None,
        name: Optional[str] = None
    ) -> "PolyMapSpec":
        polys = tuple(parse_poly(text, variables) for text in components)
        return cls(tuple(variables), polys, tuple(labels) if labels else None, name=name)

    @property
    def n_coords(self) -> int:
        return len(self.components)

    @property
    def n_params(self) -> int:
        return len(self.variables)

    @property
    def ground(self) -> GroundSet:
        return GroundSet(self.labels)

    def to_polymap(self) -> "PolyMapSpec":
        return self

    def extend_with_cone_coordinate(self, variable: str = "w", label: Optional[str] = None) -> "PolyMapSpec":
        """Cone over this variety: a fresh parameter becomes a new last coordinate."""
        nvars = self.n_params + 1
        components = tuple(p.extend(nvars) for p in self.components)
        components += (SparsePolynomial.variable(nvars, nvars - 1),)
        label = label or f"z{self.n_coords + 1}"
        return PolyMapSpec(self.variables + (variable,), components, self.labels + (label,), name=self.name)


@dataclass(frozen=True)
class LinearChangeSpec:
    """Coordinates of ``inner`` transformed by an invertible N x N rational matrix."""

    inner: "VarietySpec"
    matrix: Tuple[Tuple[Fraction, ...], ...]
    seed: Optional[int] = None
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(to_fraction(v) for v in row) for row in self.matrix)
        n = self.inner.n_coords
        if len(rows) != n or any(len(row) != n for row in rows):
            raise SpecError(f"linear change must be {n} x {n}")
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def from_seed(
        cls,
        inner: "VarietySpec",
        seed: int,
        height: Optional[int] = None,
        name: Optional[str] = None
    ) -> "LinearChangeSpec":
        from geometry.linear import random_invertible_matrix

        matrix = random_invertible_matrix(inner.n_coords, seed, height)
        return cls(inner, matrix, seed=seed, name=name)

    @property
    def n_coords(self) -> int:
        return self.inner.n_coords

    @property
    def n_params(self) -> int:
        return self.inner.n_params

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.inner.labels

    @property
    def ground(self) -> GroundSet:
        return self.inner.ground

    @cached_property
    def polymap(self) -> PolyMapSpec:
        from geometry.linear import compose_linear

        return compose_linear(self.inner, self.matrix)

    def to_polymap(self) -> PolyMapSpec:
        return self.polymap


VarietySpec = Union[ToricSpec, PolyMapSpec, LinearChangeSpec]


@dataclass(frozen=True)
class JoinSpec:
    """Summands of a join on a shared coordinate set; a secant repeats one summand."""

    summands: Tuple[VarietySpec, ...]
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        summands = tuple(self.summands)
        if not summands:
            raise SpecError("a join needs at least one summand")
        labels = summands[0].labels
        for spec in summands[1:]:
            if spec.n_coords != summands[0].n_coords:
                raise SpecError("join summands must share the coordinate count")
            if spec.labels != labels:
                raise SpecError("join summands must share coordinate labels")
        object.__setattr__(self, "summands", summands)

    @classmethod
    def secant(cls, spec: VarietySpec, s: int, name: Optional[str] = None) -> "JoinSpec":
        if s < 1:
            raise SpecError(f"secant order must be at least 1, got {s}")
        return cls((spec,) * s, name=name)

    @classmethod
    def of(cls, spec: Union[VarietySpec, "JoinSpec"]) -> "JoinSpec":
        """View a single spec as a one-summand join."""
        return spec if isinstance(spec, JoinSpec) else cls((spec,))

    @property
    def s(self) -> int:
        return len(self.summands)

    @property
    def n_coords(self) -> int:
        return self.summands[0].n_coords

    @property
    def labels(self) -> Tuple[str, ...]:
        return self.summands[0].labels

    @property
    def ground(self) -> GroundSet:
        return GroundSet(self.labels)

    def distinct_summands(self) -> Tuple[VarietySpec, ...]:
        seen = []
        for spec in self.summands:
            if spec not in seen:
                seen.append(spec)
        return tuple(seen)
