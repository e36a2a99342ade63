"""
JSON input documents for variety specs.

Documents are a discriminated union on ``type``: toric, polymap, linchange,
join, secant and builtin.
"""

from fractions import Fraction
from pathlib import Path
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, Field, TypeAdapter, ValidationError, model_validator

from core.exceptions import SpecError
from geometry.registry import AnySpec, builtin
from geometry.specs import JoinSpec, LinearChangeSpec, PolyMapSpec, ToricSpec


class ToricDocument(BaseModel):
    type: Literal["toric"]
    exponents: List[List[int]] = Field(min_length=1)
    homogenize: bool = True
    labels: Optional[List[str]] = None


class PolyMapDocument(BaseModel):
    type: Literal["polymap"]
    vars: List[str]
    components: List[str] = Field(min_length=1)
    labels: Optional[List[str]] = None


class LinChangeDocument(BaseModel):
    type: Literal["linchange"]
    inner: "SpecDocument"
    seed: Optional[int] = Field(default=None, ge=0)
    matrix: Optional[List[List[Union[int, str]]]] = None
    height: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def one_source(self):
        if (self.seed is None) == (self.matrix is None):
            raise ValueError("linchange needs exactly one of 'seed' or 'matrix'")
        return self


class JoinDocument(BaseModel):
    type: Literal["join"]
    summands: List["SpecDocument"] = Field(min_length=1)


class SecantDocument(BaseModel):
    type: Literal["secant"]
    s: int = Field(ge=1)
    inner: "SpecDocument"


class BuiltinDocument(BaseModel):
    type: Literal["builtin"]
    name: str
    params: Dict[str, Any] = Field(default_factory=dict)


SpecDocument = Annotated[
    Union[ToricDocument, PolyMapDocument, LinChangeDocument, JoinDocument, SecantDocument, BuiltinDocument],
    Field(discriminator="type"),
]

for _model in (LinChangeDocument, JoinDocument, SecantDocument):
    _model.model_rebuild()

_adapter = TypeAdapter(SpecDocument)


def _single(spec: AnySpec, context: str):
    if isinstance(spec, JoinSpec):
        raise SpecError(f"{context} expects a single variety, not a join")
    return spec


def build_spec(document) -> AnySpec:
    """Turn a validated document into a spec."""
    if isinstance(document, ToricDocument):
        return ToricSpec(
            tuple(map(tuple, document.exponents)),
            homogenize=document.homogenize,
            labels=tuple(document.labels) if document.labels else None,
        )
    if isinstance(document, PolyMapDocument):
        return PolyMapSpec.from_text(document.vars, document.components, document.labels)
    if isinstance(document, LinChangeDocument):
        inner = _single(build_spec(document.inner), "linchange")
        if document.seed is not None:
            return LinearChangeSpec.from_seed(inner, document.seed, document.height)
        try:
            matrix = tuple(tuple(Fraction(v) for v in row) for row in document.matrix)
        except (ValueError, ZeroDivisionError) as e:
            raise SpecError(f"bad matrix entry: {e}") from e
        return LinearChangeSpec(inner, matrix)
    if isinstance(document, JoinDocument):
        return JoinSpec(tuple(_single(build_spec(s), "join summand") for s in document.summands))
    if isinstance(document, SecantDocument):
        inner = build_spec(document.inner)
        if isinstance(inner, JoinSpec):
            return JoinSpec(inner.summands * document.s)
        return JoinSpec.secant(inner, document.s)
    return builtin(document.name, **document.params)


def load_spec(data: Union[dict, str]) -> AnySpec:
    """Parse a spec document given as a dict or JSON text."""
    try:
        if isinstance(data, str):
            document = _adapter.validate_json(data)
        else:
            document = _adapter.validate_python(data)
    except ValidationError as e:
        raise SpecError(f"invalid spec document: {e}") from e
    return build_spec(document)


def load_spec_file(path: Union[str, Path]) -> AnySpec:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise SpecError(f"cannot read {path}: {e}") from e
    return load_spec(text)
