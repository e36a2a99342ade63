"""
Dense exact matrices tagged with their scalar kind.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Optional, Sequence, Tuple

import numpy as np

from exactlin.polynomial import SparsePolynomial
from exactlin.scalars import PrimeField, to_fraction


class ScalarKind(str, Enum):
    PRIME_FIELD = "prime-field"
    RATIONAL = "rational"
    POLYNOMIAL = "polynomial"


@dataclass(frozen=True)
class ExactMatrix:
    """A rectangular matrix whose entries all share one scalar kind."""

    kind: ScalarKind
    entries: Tuple[Tuple[Any, ...], ...]
    ncols: int
    modulus: Optional[int] = None

    def __post_init__(self):
        for row in self.entries:
            if len(row) != self.ncols:
                raise ValueError("matrix rows must all have the same length")
        if self.kind == ScalarKind.PRIME_FIELD and self.modulus is None:
            raise ValueError("prime-field matrices need a modulus")

    # Constructors

    @classmethod
    def prime_field(cls, rows: Iterable[Sequence[int]], modulus: int, ncols: Optional[int] = None) -> "ExactMatrix":
        field = PrimeField(modulus)
        entries = tuple(tuple(field.reduce(v) for v in row) for row in rows)
        return cls(ScalarKind.PRIME_FIELD, entries, _width(entries, ncols), modulus)

    @classmethod
    def rational(cls, rows: Iterable[Sequence[Any]], ncols: Optional[int] = None) -> "ExactMatrix":
        entries = tuple(tuple(to_fraction(v) for v in row) for row in rows)
        return cls(ScalarKind.RATIONAL, entries, _width(entries, ncols))

    @classmethod
    def polynomial(cls, rows: Iterable[Sequence[SparsePolynomial]], ncols: Optional[int] = None) -> "ExactMatrix":
        entries = tuple(tuple(row) for row in rows)
        nvars = {p.nvars for row in entries for p in row}
        if len(nvars) > 1:
            raise ValueError("polynomial entries must share a variable count")
        return cls(ScalarKind.POLYNOMIAL, entries, _width(entries, ncols))

    # Shape

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def is_empty(self) -> bool:
        return self.nrows == 0 or self.ncols == 0

    # Structural operations

    def select_columns(self, indices: Sequence[int]) -> "ExactMatrix":
        indices = list(indices)
        for i in indices:
            if not 0 <= i < self.ncols:
                raise IndexError(f"column {i} out of range")
        entries = tuple(tuple(row[i] for i in indices) for row in self.entries)
        return ExactMatrix(self.kind, entries, len(indices), self.modulus)

    def vstack(self, *others: "ExactMatrix") -> "ExactMatrix":
        entries = list(self.entries)
        for other in others:
            if other.kind != self.kind or other.modulus != self.modulus:
                raise ValueError("cannot stack matrices of different scalar kinds")
            if other.ncols != self.ncols:
                raise ValueError("cannot stack matrices with different column counts")
            entries.extend(other.entries)
        return ExactMatrix(self.kind, tuple(entries), self.ncols, self.modulus)

    def transpose(self) -> "ExactMatrix":
        entries = tuple(tuple(row[j] for row in self.entries) for j in range(self.ncols))
        return ExactMatrix(self.kind, entries, self.nrows, self.modulus)

    def to_numpy(self) -> np.ndarray:
        """Object-dtype copy suitable for in-place elimination."""
        array = np.empty((self.nrows, self.ncols), dtype=object)
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                array[i, j] = value
        return array

    def tolist(self) -> list:
        return [list(row) for row in self.entries]


def _width(entries: Tuple[Tuple[Any, ...], ...], ncols: Optional[int]) -> int:
    if ncols is not None:
        return ncols
    return len(entries[0]) if entries else 0


def stack(matrices: Sequence[ExactMatrix]) -> ExactMatrix:
    if not matrices:
        raise ValueError("nothing to stack")
    return matrices[0].vstack(*matrices[1:])
