"""
Rank-oracle matroids.

A matroid is a ground set plus a rank function on subsets. Ranks are memoized;
bases, loops and coloops are derived from the oracle on demand.
"""

import logging
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from core.exceptions import EnumerationCapExceeded, GroundSetMismatchError, SpecError
from config.settings import get_settings

logger = logging.getLogger(__name__)

Subset = FrozenSet[int]
Element = Union[int, str]


class Provenance(str, Enum):
    COLUMN_MATROID = "column-matroid"
    JACOBIAN = "jacobian"
    UNION = "union"
    UNIFORM = "uniform"
    GRAPHIC = "graphic"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class GroundSet:
    """Ordered, labelled ground set; elements are indices 0..N-1 internally."""

    labels: Tuple[str, ...]

    def __post_init__(self):
        if not self.labels:
            raise SpecError("ground set must be nonempty")
        if len(set(self.labels)) != len(self.labels):
            raise SpecError(f"ground set labels are not distinct: {list(self.labels)}")

    @classmethod
    def default(cls, size: int, prefix: str = "z", start: int = 1) -> "GroundSet":
        return cls(tuple(f"{prefix}{i}" for i in range(start, start + size)))

    @property
    def size(self) -> int:
        return len(self.labels)

    def all(self) -> Subset:
        return frozenset(range(self.size))

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise SpecError(f"unknown label '{label}'") from None

    def subset(self, elements: Iterable[Element]) -> Subset:
        """Resolve labels and/or indices to a validated index set."""
        result = set()
        for element in elements:
            if isinstance(element, str):
                result.add(self.index_of(element))
            else:
                index = int(element)
                if not 0 <= index < self.size:
                    raise SpecError(f"element {index} is outside the ground set of size {self.size}")
                result.add(index)
        return frozenset(result)

    def labels_of(self, subset: Iterable[int]) -> List[str]:
        return [self.labels[i] for i in sorted(subset)]


class Matroid:
    """A matroid given by a memoized rank oracle."""

    def __init__(
        self,
        ground: GroundSet,
        rank_oracle: Callable[[Subset], int],
        provenance: Provenance,
        parameters: Optional[dict] = None
    ):
        """
        Initialize the matroid.

        Args:
            ground: Ground set
            rank_oracle: Total function from index subsets to ranks
            provenance: How the oracle was built
            parameters: Construction parameters, used for serialization
        """
        self.ground = ground
        self.provenance = provenance
        self.parameters = dict(parameters or {})
        self._oracle = rank_oracle
        self._memo: Dict[Subset, int] = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return (
            f"<Matroid(provenance={self.provenance.value}, "
            f"N={self.ground.size}, rank={self.full_rank})>"
        )

    @property
    def size(self) -> int:
        return self.ground.size

    def rank(self, subset: Iterable[Element]) -> int:
        """Memoized rank of a subset given by indices or labels."""
        key = subset if isinstance(subset, frozenset) and _is_index_set(subset, self.size) \
            else self.ground.subset(subset)
        with self._lock:
            cached = self._memo.get(key)
        if cached is not None:
            return cached
        value = 0 if not key else self._oracle(key)
        with self._lock:
            self._memo[key] = value
        return value

    @property
    def full_rank(self) -> int:
        return self.rank(self.ground.all())

    def is_independent(self, subset: Iterable[Element]) -> bool:
        key = self.ground.subset(subset)
        return self.rank(key) == len(key)

    def enumerate_bases(self, cap: Optional[int] = None) -> List[Tuple[int, ...]]:
        """
        All bases as sorted index tuples, in lexicographic order.

        Raises:
            EnumerationCapExceeded: ground set larger than the cap
        """
        cap = cap if cap is not None else get_settings().enumeration_cap
        if self.size > cap:
            raise EnumerationCapExceeded(self.size, cap)

        r = self.full_rank
        n = self.size
        bases: List[Tuple[int, ...]] = []

        def extend(current: Tuple[int, ...], start: int):
            if len(current) == r:
                bases.append(current)
                return
            # Leave room for the remaining r - len(current) elements.
            for e in range(start, n - (r - len(current)) + 1):
                candidate = current + (e,)
                if self.rank(frozenset(candidate)) == len(candidate):
                    extend(candidate, e + 1)

        extend((), 0)
        logger.debug("enumerated %d bases of %r", len(bases), self)
        return bases

    def loops_and_coloops(self) -> Tuple[Subset, Subset]:
        r = self.full_rank
        everything = self.ground.all()
        loops = frozenset(e for e in everything if self.rank(frozenset([e])) == 0)
        coloops = frozenset(e for e in everything if self.rank(everything - {e}) == r - 1)
        return loops, coloops

    def to_document(self, with_bases: bool = False, cap: Optional[int] = None):
        """Serializable description: bases when enumerated, else provenance + parameters."""
        from matroid.models import MatroidDocument

        return MatroidDocument(
            ground=list(self.ground.labels),
            rank=self.full_rank,
            bases=[list(b) for b in self.enumerate_bases(cap)] if with_bases else None,
            provenance=self.provenance.value,
            parameters=None if with_bases else self.parameters
        )


def _is_index_set(subset: frozenset, size: int) -> bool:
    return all(isinstance(e, int) and 0 <= e < size for e in subset)


def require_common_ground(matroids: Sequence[Matroid]) -> GroundSet:
    """Return the shared ground set or raise."""
    if not matroids:
        raise SpecError("at least one matroid is required")
    ground = matroids[0].ground
    for other in matroids[1:]:
        if other.ground != ground:
            raise GroundSetMismatchError(
                f"ground sets differ: {list(ground.labels)} vs {list(other.ground.labels)}"
            )
    return ground


def loops_and_coloops(m: Matroid) -> Tuple[Subset, Subset]:
    return m.loops_and_coloops()
