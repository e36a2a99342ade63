"""
Matroid constructors: uniform, graphic, column (linear over Q) and explicit.
"""

from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from core.exceptions import SpecError
from exactlin.matrix import ExactMatrix, ScalarKind
from exactlin.rank import rank_rational
from matroid.base import GroundSet, Matroid, Provenance, Subset


def _ground(size: int, labels: Optional[Sequence[str]]) -> GroundSet:
    if labels is None:
        return GroundSet.default(size)
    if len(labels) != size:
        raise SpecError(f"expected {size} labels, got {len(labels)}")
    return GroundSet(tuple(labels))


def uniform(n: int, r: int, labels: Optional[Sequence[str]] = None) -> Matroid:
    """U(r, n): every set of size at most r is independent."""
    if not 0 <= r <= n:
        raise SpecError(f"uniform matroid needs 0 <= r <= N, got r={r}, N={n}")
    return Matroid(
        _ground(n, labels),
        lambda subset: min(len(subset), r),
        Provenance.UNIFORM,
        {"n": n, "r": r}
    )


def complete_graph_edges(n: int) -> List[Tuple[int, int]]:
    """Edges of K_n on vertices 1..n in lexicographic order."""
    return list(combinations(range(1, n + 1), 2))


def graphic(edges: Sequence[Tuple[object, object]], labels: Optional[Sequence[str]] = None) -> Matroid:
    """Cycle matroid of a graph: rank = touched vertices minus components."""
    edges = [tuple(e) for e in edges]
    if labels is None:
        labels = [f"{u}-{v}" for u, v in edges]

    def rank(subset: Subset) -> int:
        graph = nx.MultiGraph()
        graph.add_edges_from(edges[i] for i in subset)
        return graph.number_of_nodes() - nx.number_connected_components(graph)

    return Matroid(
        _ground(len(edges), labels),
        rank,
        Provenance.GRAPHIC,
        {"edges": [list(e) for e in edges]}
    )


def column_matroid(m: ExactMatrix, labels: Optional[Sequence[str]] = None) -> Matroid:
    """Linear matroid of the columns of a rational matrix."""
    if m.kind != ScalarKind.RATIONAL:
        raise SpecError("column_matroid needs a rational matrix")

    def rank(subset: Subset) -> int:
        return rank_rational(m.select_columns(sorted(subset)))

    return Matroid(
        _ground(m.ncols, labels),
        rank,
        Provenance.COLUMN_MATROID,
        {"matrix": [[str(v) for v in row] for row in m.entries]}
    )


def explicit(bases: Iterable[Iterable[int]], labels: Sequence[str]) -> Matroid:
    """Matroid from its list of bases (indices)."""
    ground = GroundSet(tuple(labels))
    base_sets = [ground.subset(b) for b in bases]
    if not base_sets:
        raise SpecError("a matroid has at least one basis")
    sizes = {len(b) for b in base_sets}
    if len(sizes) != 1:
        raise SpecError("bases must all have the same size")

    def rank(subset: Subset) -> int:
        return max(len(subset & b) for b in base_sets)

    return Matroid(
        ground,
        rank,
        Provenance.EXPLICIT,
        {"bases": [sorted(b) for b in base_sets]}
    )
