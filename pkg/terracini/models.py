"""
Pydantic report models. Field order is the JSON field order.
"""

from typing import Any, List, Optional

from pydantic import BaseModel, model_validator

from matroid.models import PartitionDocument


class DefectReport(BaseModel):
    """Actual versus expected dimension of a (projected) join."""
    actual_dim: int
    expected_dim: int
    defect: int
    defective: bool

    @classmethod
    def from_dims(cls, actual: int, expected: int) -> "DefectReport":
        return cls(
            actual_dim=actual,
            expected_dim=expected,
            defect=expected - actual,
            defective=actual < expected
        )

    @model_validator(mode="after")
    def consistent(self):
        if self.defect != self.expected_dim - self.actual_dim or self.defect < 0:
            raise ValueError(f"inconsistent defect {self.defect} for dims {self.actual_dim}/{self.expected_dim}")
        if self.defective != (self.defect > 0):
            raise ValueError("defective flag disagrees with defect")
        return self


class MatroidReport(BaseModel):
    name: Optional[str] = None
    ground: List[str]
    rank: int
    base_count: Optional[int] = None
    bases: Optional[List[List[str]]] = None
    loops: List[str]
    coloops: List[str]
    provenance: str


class JoinReport(BaseModel):
    s: int
    matroid: MatroidReport
    defect: DefectReport


class MissingBasis(BaseModel):
    subset: List[str]
    witness: DefectReport


class UnionCheckReport(BaseModel):
    union_rank: int
    join_rank: int
    rank_gap: int
    union_base_count: int
    join_base_count: int
    is_terracini_union: bool
    missing_bases: List[MissingBasis]

    @model_validator(mode="after")
    def consistent(self):
        if self.is_terracini_union != (not self.missing_bases):
            raise ValueError("verdict disagrees with the missing bases")
        return self


class SubsetRankReport(BaseModel):
    subset: List[str]
    rank: int
    defect: Optional[DefectReport] = None


class ColoopCheck(BaseModel):
    """A matroid with a coloop has a 2-secant that fills space or is defective."""
    secant_dim: int
    ambient_dim: int
    fills_space: bool
    defective: bool
    holds: bool


class ConeReport(BaseModel):
    rank: int
    loops: List[str]
    coloops: List[str]
    coloop_check: Optional[ColoopCheck] = None


class PartitionReport(BaseModel):
    join_base_count: int
    certificates: List[PartitionDocument]


class SandwichReport(BaseModel):
    """Weak order between the join matroid and the union of the summand matroids."""
    join_base_count: int
    union_base_count: int
    join_below_union: bool
    strict: bool


class ScanMatch(BaseModel):
    offset: List[int]
    subset: List[str]
    union_independent: Optional[bool] = None
    join_dependent: Optional[bool] = None
    missing_basis: Optional[bool] = None


class ScanReport(BaseModel):
    pattern_size: int
    match_count: int
    matches: List[ScanMatch]


class GoldenCheck(BaseModel):
    label: str
    expected: Any
    actual: Any
    passed: bool


class GoldenReport(BaseModel):
    name: str
    passed: bool
    rechecked_symbolically: bool = False
    checks: List[GoldenCheck]
