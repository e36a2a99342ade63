"""
Parameter sampling for Jacobian evaluation.

Sample points are a pure function of (seed, trial, summand); the modulus only
sets the range of the draw.
"""

from dataclasses import dataclass, replace
from enum import Enum
from typing import List, Sequence, Tuple

import numpy as np

from core.exceptions import SpecError
from exactlin.scalars import PrimeField
from geometry.specs import JoinSpec, ToricSpec, VarietySpec

Point = Tuple[int, ...]


class SamplerMode(str, Enum):
    GENERIC = "generic"
    SUBGROUP = "subgroup"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class Sampler:
    """
    How parameter points are chosen.

    generic: independent uniform nonzero draws per summand and trial.
    subgroup: summand k uses base^{v_k}, i.e. points of a one-parameter
        subgroup of the torus; the trial index is ignored.
    explicit: caller-given points, one per summand.
    """

    mode: SamplerMode = SamplerMode.GENERIC
    seed: int = 0
    directions: Tuple[Tuple[int, ...], ...] = ()
    base: int = 2
    points: Tuple[Point, ...] = ()

    def __post_init__(self):
        if self.seed < 0:
            raise SpecError(f"seed must be nonnegative, got {self.seed}")
        object.__setattr__(self, "directions", tuple(tuple(int(v) for v in d) for d in self.directions))
        object.__setattr__(self, "points", tuple(tuple(int(v) for v in p) for p in self.points))

    @classmethod
    def generic(cls, seed: int = 0) -> "Sampler":
        return cls(SamplerMode.GENERIC, seed=seed)

    @classmethod
    def subgroup(cls, directions: Sequence[Sequence[int]], base: int = 2) -> "Sampler":
        return cls(SamplerMode.SUBGROUP, directions=tuple(map(tuple, directions)), base=base)

    @classmethod
    def explicit(cls, points: Sequence[Sequence[int]]) -> "Sampler":
        return cls(SamplerMode.EXPLICIT, points=tuple(map(tuple, points)))

    @property
    def is_deterministic(self) -> bool:
        """True when every trial sees the same points."""
        return self.mode != SamplerMode.GENERIC

    def summand(self, k: int) -> "Sampler":
        """The sampler that summand k sees when its matroid is built on its own."""
        if self.mode == SamplerMode.SUBGROUP:
            return replace(self, directions=self.directions[k:k + 1])
        if self.mode == SamplerMode.EXPLICIT:
            return replace(self, points=self.points[k:k + 1])
        return self


def _subgroup_point(spec: VarietySpec, direction: Tuple[int, ...], base: int, field: PrimeField) -> Point:
    base = field.reduce(base)
    if base == 0:
        raise SpecError("subgroup base vanishes modulo the prime")
    if isinstance(spec, ToricSpec):
        expected = len(spec.exponents)
        if len(direction) != expected:
            raise SpecError(f"direction needs {expected} entries, got {len(direction)}")
        point = tuple(field.power(base, v) for v in direction)
        return point + ((1,) if spec.homogenize else ())
    if len(direction) != spec.n_params:
        raise SpecError(f"direction needs {spec.n_params} entries, got {len(direction)}")
    return tuple(field.power(base, v) for v in direction)


def sample_points(sampler: Sampler, join: JoinSpec, trial: int, field: PrimeField) -> List[Point]:
    """
    One parameter point per summand of ``join`` for the given trial.

    Raises:
        SpecError: if directions or explicit points do not fit the summands.
    """
    if sampler.mode == SamplerMode.GENERIC:
        points = []
        for k, spec in enumerate(join.summands):
            rng = np.random.default_rng(np.random.SeedSequence([sampler.seed, trial, k]))
            points.append(field.random_nonzero(rng, spec.n_params))
        return points

    if sampler.mode == SamplerMode.SUBGROUP:
        if len(sampler.directions) != join.s:
            raise SpecError(f"need {join.s} subgroup directions, got {len(sampler.directions)}")
        return [
            _subgroup_point(spec, direction, sampler.base, field)
            for spec, direction in zip(join.summands, sampler.directions)
        ]

    if len(sampler.points) != join.s:
        raise SpecError(f"need {join.s} explicit points, got {len(sampler.points)}")
    points = []
    for spec, point in zip(join.summands, sampler.points):
        if len(point) != spec.n_params:
            raise SpecError(f"point {point} needs {spec.n_params} coordinates")
        points.append(tuple(field.reduce(v) for v in point))
    return points
