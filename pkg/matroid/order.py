"""
Weak order on matroids over a common ground set.

M1 <= M2 when every set dependent in M2 is dependent in M1, i.e. every
M1-independent set is M2-independent. Checking the bases of M1 suffices.
"""

from typing import Optional

from matroid.base import Matroid, require_common_ground


def weak_order_leq(m1: Matroid, m2: Matroid, cap: Optional[int] = None) -> bool:
    """True iff every basis of m1 is independent in m2."""
    require_common_ground([m1, m2])
    if m1.full_rank > m2.full_rank:
        return False
    return all(m2.is_independent(b) for b in m1.enumerate_bases(cap))


def weak_order_strict(m1: Matroid, m2: Matroid, cap: Optional[int] = None) -> bool:
    """m1 < m2: m1 <= m2 and some m1-dependent set is m2-independent."""
    if not weak_order_leq(m1, m2, cap):
        return False
    if m1.full_rank < m2.full_rank:
        return True
    # Equal ranks: the orders differ iff some basis of m2 is m1-dependent.
    return any(not m1.is_independent(b) for b in m2.enumerate_bases(cap))
