"""
Sampling and enumeration parameters for one computation.
"""

from dataclasses import dataclass, field, replace
from typing import Optional

from config.settings import Settings, get_settings
from core.exceptions import SpecError
from exactlin.scalars import PrimeField
from geometry.sampler import Sampler


@dataclass(frozen=True)
class MatroidComputationConfig:
    """
    How algebraic matroids are computed.

    ``trials`` independent generic samples are taken and ranks are the maximum
    over trials. With ``verify_symbolic`` every set found dependent is
    re-checked by fraction-free elimination over the polynomial ring.
    """

    sampler: Sampler = field(default_factory=Sampler)
    trials: int = 3
    verify_symbolic: bool = False
    prime: int = field(default_factory=lambda: get_settings().prime)
    workers: int = 1
    enumeration_cap: int = field(default_factory=lambda: get_settings().enumeration_cap)

    def __post_init__(self):
        if self.trials < 1:
            raise SpecError(f"trials must be at least 1, got {self.trials}")
        if self.prime < 3:
            raise SpecError(f"prime must be odd, got {self.prime}")
        PrimeField(self.prime)
        if self.workers < 1:
            raise SpecError(f"workers must be at least 1, got {self.workers}")

    @classmethod
    def from_settings(cls, settings: Optional[Settings] = None, **overrides) -> "MatroidComputationConfig":
        """Defaults from settings; keyword overrides win (None means keep)."""
        settings = settings or get_settings()
        values = {
            "sampler": Sampler.generic(settings.seed),
            "trials": settings.trials,
            "verify_symbolic": settings.verify_symbolic,
            "prime": settings.prime,
            "workers": settings.effective_workers,
            "enumeration_cap": settings.enumeration_cap,
        }
        seed = overrides.pop("seed", None)
        if seed is not None:
            values["sampler"] = Sampler.generic(seed)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    @property
    def prime_field(self) -> PrimeField:
        return PrimeField(self.prime)

    @property
    def effective_trials(self) -> int:
        """Deterministic samplers give the same point every trial."""
        return 1 if self.sampler.is_deterministic else self.trials

    def with_sampler(self, sampler: Sampler) -> "MatroidComputationConfig":
        return replace(self, sampler=sampler)
