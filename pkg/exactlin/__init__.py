"""
Exact scalar, polynomial and matrix arithmetic.
"""

from exactlin.scalars import PrimeField, PrimeFieldScalar, RationalScalar, to_fraction
from exactlin.polynomial import SparsePolynomial
from exactlin.parser import parse_poly
from exactlin.matrix import ExactMatrix, ScalarKind
from exactlin.rank import (
    poly_partial,
    rank_mod_p,
    rank_rational,
    rank_symbolic,
    solve_rational,
)

__all__ = [
    "PrimeField",
    "PrimeFieldScalar",
    "RationalScalar",
    "to_fraction",
    "SparsePolynomial",
    "parse_poly",
    "ExactMatrix",
    "ScalarKind",
    "poly_partial",
    "rank_mod_p",
    "rank_rational",
    "rank_symbolic",
    "solve_rational",
]
