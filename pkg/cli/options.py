"""
Run configuration assembled from command-line flags.
"""

from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from config.settings import get_settings
from core.exceptions import SpecError
from geometry.registry import AnySpec, builtin
from geometry.schema import load_spec_file
from geometry.specs import JoinSpec
from terracini.config import MatroidComputationConfig
from terracini.service import TerraciniService


ALL_LABELS = "all"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


def resolve_output(output: Optional[OutputFormat]) -> OutputFormat:
    """The --output flag, or settings.output_format when it is absent."""
    if output is not None:
        return output
    configured = get_settings().output_format
    try:
        return OutputFormat(configured.lower())
    except ValueError as e:
        raise SpecError(f"unknown output format '{configured}'") from e


def parse_params(pairs: Optional[List[str]]) -> Dict[str, str]:
    """Turn repeated ``key=value`` flags into a dict."""
    params = {}
    for pair in pairs or []:
        key, sep, value = pair.partition("=")
        if not sep or not key.strip():
            raise SpecError(f"expected key=value, got '{pair}'")
        params[key.strip()] = value.strip()
    return params


def parse_subset(values: Optional[List[str]]) -> Optional[List[str]]:
    """Labels from repeated or comma-separated ``--subset`` flags."""
    if values is None:
        return None
    labels = [label.strip() for value in values for label in value.split(",")]
    return [label for label in labels if label]


class RunConfig(BaseModel):
    """Everything one CLI invocation needs; exactly one input source."""

    input_path: Optional[Path] = None
    builtin: Optional[str] = None
    params: Dict[str, str] = Field(default_factory=dict)
    s: int = Field(default=1, ge=1)
    subset: Optional[List[str]] = None
    seed: Optional[int] = Field(default=None, ge=0)
    trials: Optional[int] = Field(default=None, ge=1)
    prime: Optional[int] = Field(default=None, ge=3)
    verify_symbolic: bool = False
    workers: Optional[int] = Field(default=None, ge=1)
    cap: Optional[int] = Field(default=None, ge=1)
    bases: bool = False
    output: Optional[OutputFormat] = None

    @model_validator(mode="after")
    def one_input(self):
        if (self.input_path is None) == (self.builtin is None):
            raise ValueError("give exactly one of an input file or --builtin")
        return self

    @model_validator(mode="after")
    def default_output(self):
        self.output = resolve_output(self.output)
        return self

    def load_spec(self) -> AnySpec:
        if self.builtin is not None:
            return builtin(self.builtin, **self.params)
        if self.params:
            raise SpecError("--param only applies to --builtin")
        return load_spec_file(self.input_path)

    def load_join(self) -> JoinSpec:
        """The input as a join; ``s`` turns a single variety into its secant."""
        spec = self.load_spec()
        if isinstance(spec, JoinSpec):
            if self.s != 1:
                raise SpecError("-s applies to a single variety, not a join")
            return spec
        return JoinSpec.secant(spec, self.s)

    def selected_labels(self, join: JoinSpec) -> List[str]:
        """Labels named by --subset, in ground order; the word ``all`` selects the whole ground set."""
        ground = join.ground
        if self.subset == [ALL_LABELS] and ALL_LABELS not in ground.labels:
            return list(ground.labels)
        return ground.labels_of(ground.subset(self.subset or []))

    def service(self) -> TerraciniService:
        return build_service(self.seed, self.trials, self.prime, self.verify_symbolic, self.workers, self.cap)


def build_service(
    seed: Optional[int] = None,
    trials: Optional[int] = None,
    prime: Optional[int] = None,
    verify_symbolic: bool = False,
    workers: Optional[int] = None,
    cap: Optional[int] = None
) -> TerraciniService:
    """Service from settings with flag overrides (None keeps the setting)."""
    cfg = MatroidComputationConfig.from_settings(
        get_settings(),
        seed=seed,
        trials=trials,
        prime=prime,
        verify_symbolic=verify_symbolic or None,
        workers=workers,
        enumeration_cap=cap,
    )
    return TerraciniService(cfg)
