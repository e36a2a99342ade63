"""
Matroid union through Edmonds' matroid-partition algorithm.

Elements of a set E are inserted one at a time, in index order. Each insertion
runs a breadth-first search for a shortest exchange path: an element y may
enter part i directly if part i + y stays independent in M_i, or by displacing
some z with part i - z + y independent, after which z must be placed elsewhere.
Shortest paths keep all simultaneous exchanges valid. When no path exists the
element is left out; the final part sizes add up to the union rank of E.
"""

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from matroid.base import Element, GroundSet, Matroid, Provenance, Subset, require_common_ground
from matroid.models import PartitionDocument


@dataclass(frozen=True)
class PartitionCertificate:
    """E split into parts, part i independent in summand i."""
    subset: Tuple[int, ...]
    parts: Tuple[Tuple[int, ...], ...]

    def to_document(self, ground: GroundSet) -> PartitionDocument:
        return PartitionDocument(
            subset=ground.labels_of(self.subset),
            independent=True,
            union_rank=len(self.subset),
            parts=[ground.labels_of(p) for p in self.parts]
        )


@dataclass(frozen=True)
class PartitionFailure:
    """E is dependent in the union; union_rank < |E|."""
    subset: Tuple[int, ...]
    union_rank: int

    def to_document(self, ground: GroundSet) -> PartitionDocument:
        return PartitionDocument(
            subset=ground.labels_of(self.subset),
            independent=False,
            union_rank=self.union_rank
        )


class MatroidPartitioner:
    """Greedy augmenting-path partitioning over the summands' independence oracles."""

    def __init__(self, summands: Sequence[Matroid]):
        require_common_ground(summands)
        self.summands = list(summands)

    def partition(self, subset: Iterable[int]) -> List[FrozenSet[int]]:
        """
        Maximal partitionable part of the subset.

        Returns:
            One disjoint part per summand, part i independent in summand i
        """
        parts: List[set] = [set() for _ in self.summands]
        owner: Dict[int, int] = {}
        for x in sorted(subset):
            self._augment(x, parts, owner)
        return [frozenset(p) for p in parts]

    def _fits(self, i: int, members: Iterable[int]) -> bool:
        return self.summands[i].is_independent(frozenset(members))

    def _augment(self, x: int, parts: List[set], owner: Dict[int, int]) -> bool:
        parent: Dict[int, int] = {}
        visited = {x}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for i, part in enumerate(parts):
                if owner.get(y) == i:
                    continue
                if self._fits(i, part | {y}):
                    self._apply(y, i, parts, owner, parent)
                    return True
                for z in sorted(part):
                    if z in visited:
                        continue
                    if self._fits(i, (part - {z}) | {y}):
                        visited.add(z)
                        parent[z] = y
                        queue.append(z)
        return False

    @staticmethod
    def _apply(y: int, target: int, parts: List[set], owner: Dict[int, int], parent: Dict[int, int]):
        # Walk the exchange path back to the inserted element.
        current: Optional[int] = y
        while current is not None:
            previous_part = owner.get(current)
            if previous_part is not None:
                parts[previous_part].discard(current)
            parts[target].add(current)
            owner[current] = target
            if current not in parent:
                break
            current, target = parent[current], previous_part

    def union_rank(self, subset: Iterable[int]) -> int:
        return sum(len(p) for p in self.partition(subset))


def matroid_union(matroids: Sequence[Matroid]) -> Matroid:
    """
    The union M_1 v ... v M_s on the common ground set.

    Raises:
        GroundSetMismatchError: ground sets differ
    """
    ground = require_common_ground(matroids)
    partitioner = MatroidPartitioner(matroids)
    return Matroid(
        ground,
        partitioner.union_rank,
        Provenance.UNION,
        {"summands": [m.provenance.value for m in matroids]}
    )


def self_union(m: Matroid, s: int) -> Matroid:
    """The s-fold union sM."""
    return matroid_union([m] * s)


def partition_certificate(
    matroids: Sequence[Matroid],
    subset: Iterable[Element]
) -> Union[PartitionCertificate, PartitionFailure]:
    """Certificate that E is independent in the union, or the union rank of E."""
    ground = require_common_ground(matroids)
    key = ground.subset(subset)
    parts = MatroidPartitioner(matroids).partition(key)
    covered = sum(len(p) for p in parts)
    ordered = tuple(sorted(key))
    if covered == len(key):
        return PartitionCertificate(ordered, tuple(tuple(sorted(p)) for p in parts))
    return PartitionFailure(ordered, covered)


def union_rank_bruteforce(matroids: Sequence[Matroid], subset: Iterable[int]) -> int:
    """Reference union rank: best assignment of elements to summands (exponential)."""
    elements = sorted(subset)
    s = len(matroids)
    best = 0
    # Assignment value s means "left out".
    for assignment in product(range(s + 1), repeat=len(elements)):
        parts: List[List[int]] = [[] for _ in range(s)]
        for e, a in zip(elements, assignment):
            if a < s:
                parts[a].append(e)
        size = sum(len(p) for p in parts)
        if size <= best:
            continue
        if all(m.is_independent(p) for m, p in zip(matroids, parts)):
            best = size
    return best
