"""
Exact rank computations.

- ``rank_mod_p``: Gaussian elimination over a prime field on an object-dtype
  numpy array (entries are Python ints, so moduli near 2^62 never overflow).
- ``rank_rational`` / ``rank_symbolic``: fraction-free (Bareiss) elimination
  over the integers and over Q[x_1..x_m]; every intermediate entry is a minor
  of the input, so the division by the previous pivot is always exact.
"""

import math
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

import numpy as np

from core.exceptions import SpecError
from exactlin.matrix import ExactMatrix, ScalarKind
from exactlin.polynomial import SparsePolynomial


def _gauss_rank_dense_modp(A: np.ndarray, p: int) -> int:
    m, n = A.shape
    r = 0
    for c in range(n):
        pivot = None
        for i in range(r, m):
            if A[i, c] % p != 0:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            A[[r, pivot], :] = A[[pivot, r], :]
        inv = pow(int(A[r, c]) % p, -1, p)
        A[r, c:] = (A[r, c:] * inv) % p
        for i in range(r + 1, m):
            f = A[i, c] % p
            if f != 0:
                A[i, c:] = (A[i, c:] - f * A[r, c:]) % p
        r += 1
        if r == m:
            break
    return r


def rank_mod_p(m: ExactMatrix) -> int:
    """Row rank over the prime field of the matrix; the input is not modified."""
    if m.kind != ScalarKind.PRIME_FIELD:
        raise SpecError(f"rank_mod_p needs a prime-field matrix, got {m.kind.value}")
    if m.is_empty():
        return 0
    # Eliminate along the shorter side.
    array = m.to_numpy()
    if m.nrows > m.ncols:
        array = array.T.copy()
    return _gauss_rank_dense_modp(array, m.modulus)


def _bareiss_rank(
    rows: List[list],
    is_zero: Callable,
    sub_mul: Callable,
    exact_div: Callable,
    weight: Callable,
    one,
    zero,
) -> int:
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    previous = one
    r = 0
    for c in range(n):
        candidates = [i for i in range(r, m) if not is_zero(rows[i][c])]
        if not candidates:
            continue
        # Smallest pivot keeps intermediate entries small.
        pivot = min(candidates, key=lambda i: (weight(rows[i][c]), i))
        rows[r], rows[pivot] = rows[pivot], rows[r]
        head = rows[r][c]
        for i in range(r + 1, m):
            row = rows[i]
            lead = row[c]
            for j in range(c + 1, n):
                row[j] = exact_div(sub_mul(head, row[j], lead, rows[r][j]), previous)
            row[c] = zero
        previous = head
        r += 1
        if r == m:
            break
    return r


def _integer_rows(m: ExactMatrix) -> List[List[int]]:
    rows = []
    for row in m.entries:
        scale = 1
        for v in row:
            scale = scale * v.denominator // math.gcd(scale, v.denominator)
        rows.append([int(v * scale) for v in row])
    return rows


def rank_rational(m: ExactMatrix) -> int:
    """Exact rank of a rational matrix (denominators cleared row by row)."""
    if m.kind != ScalarKind.RATIONAL:
        raise SpecError(f"rank_rational needs a rational matrix, got {m.kind.value}")
    if m.is_empty():
        return 0
    return _bareiss_rank(
        _integer_rows(m),
        is_zero=lambda v: v == 0,
        sub_mul=lambda a, b, c, d: a * b - c * d,
        exact_div=lambda x, y: x // y,
        weight=abs,
        one=1,
        zero=0,
    )


def rank_symbolic(m: ExactMatrix) -> int:
    """Rank over the field of rational functions of a polynomial matrix."""
    if m.kind != ScalarKind.POLYNOMIAL:
        raise SpecError(f"rank_symbolic needs a polynomial matrix, got {m.kind.value}")
    if m.is_empty():
        return 0
    nvars = m.entries[0][0].nvars
    one = SparsePolynomial.constant(nvars, 1)
    return _bareiss_rank(
        [list(row) for row in m.entries],
        is_zero=lambda v: v.is_zero(),
        sub_mul=lambda a, b, c, d: a * b - c * d,
        exact_div=lambda x, y: x.exact_div(y),
        weight=lambda v: (len(v), v.degree),
        one=one,
        zero=SparsePolynomial.zero(nvars),
    )


def poly_partial(f: SparsePolynomial, index: int) -> SparsePolynomial:
    """Formal partial derivative; out-of-range indices are argument errors."""
    if not 0 <= index < f.nvars:
        raise SpecError(f"variable index {index} out of range for {f.nvars} variables")
    return f.partial(index)


def solve_rational(
    A: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
) -> Optional[List[Fraction]]:
    """
    Solve A x = b exactly.

    Returns None when the system is inconsistent. Free variables (if A lacks
    full column rank) are set to zero.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    aug = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(A, b)]
    pivots = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    solution = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        solution[c] = aug[i][n]
    return solution
