"""JSON documents describing lattice point sets."""

from pathlib import Path
from typing import Annotated, List, Literal, Union

from pydantic import BaseModel, Field, TypeAdapter, ValidationError

from core.exceptions import SpecError
from polytope.lattice import LatticePointSet, dilated_simplex, grid, hull_points, product


class PointsDocument(BaseModel):
    type: Literal["points"]
    dim: int = Field(ge=1)
    points: List[List[int]]


class SimplexDocument(BaseModel):
    type: Literal["simplex"]
    dim: int = Field(ge=1)
    degree: int = Field(ge=0)


class GridDocument(BaseModel):
    type: Literal["grid"]
    box: List[int] = Field(min_length=1)


class HullDocument(BaseModel):
    type: Literal["hull"]
    vertices: List[List[int]] = Field(min_length=1)


class ProductDocument(BaseModel):
    type: Literal["product"]
    factors: List["PolytopeDocument"] = Field(min_length=1)


PolytopeDocument = Annotated[
    Union[PointsDocument, SimplexDocument, GridDocument, HullDocument, ProductDocument],
    Field(discriminator="type"),
]

ProductDocument.model_rebuild()

_adapter = TypeAdapter(PolytopeDocument)


def build_points(document) -> LatticePointSet:
    """Turn a validated polytope document into its lattice point set."""
    if isinstance(document, PointsDocument):
        return LatticePointSet(document.dim, tuple(map(tuple, document.points)))
    if isinstance(document, SimplexDocument):
        return dilated_simplex(document.dim, document.degree)
    if isinstance(document, GridDocument):
        return grid(document.box)
    if isinstance(document, HullDocument):
        return hull_points(document.vertices)
    return product(*(build_points(f) for f in document.factors))


def load_polytope(data: Union[dict, str]) -> LatticePointSet:
    """Parse a polytope document given as a dict or JSON text."""
    try:
        if isinstance(data, str):
            document = _adapter.validate_json(data)
        else:
            document = _adapter.validate_python(data)
    except ValidationError as e:
        raise SpecError(f"invalid polytope document: {e}") from e
    return build_points(document)


def load_polytope_file(path: Union[str, Path]) -> LatticePointSet:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise SpecError(f"cannot read {path}: {e}") from e
    return load_polytope(text)
