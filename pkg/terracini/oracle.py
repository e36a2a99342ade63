"""
Rank oracles for algebraic matroids.

The Jacobian oracle evaluates the stacked Jacobian of a join at sampled
points once per trial and answers rank queries by elimination mod p on the
selected columns. A rank found at a point never exceeds the generic rank, so
independence verdicts are certain and the maximum over trials only improves
dependence verdicts.
"""

import logging
import threading
from typing import List, Optional

from exactlin.matrix import ExactMatrix
from exactlin.rank import rank_mod_p, rank_symbolic
from geometry.jacobian import join_jacobian_at, symbolic_join_jacobian
from geometry.sampler import sample_points
from geometry.specs import JoinSpec
from matroid.base import Subset
from terracini.config import MatroidComputationConfig

logger = logging.getLogger(__name__)


class JacobianRankOracle:
    """Rank of coordinate subsets of a join, from sampled Jacobians."""

    def __init__(self, join: JoinSpec, cfg: MatroidComputationConfig):
        self.join = join
        self.cfg = cfg
        field = cfg.prime_field
        self.matrices: List[ExactMatrix] = [
            join_jacobian_at(join, sample_points(cfg.sampler, join, trial, field), field)
            for trial in range(cfg.effective_trials)
        ]
        self._symbolic: Optional[ExactMatrix] = None
        self._lock = threading.Lock()
        self.escalations = 0
        logger.debug(
            "sampled %d Jacobian(s) of shape %s mod %d (%s sampler)",
            len(self.matrices), self.matrices[0].shape, cfg.prime, cfg.sampler.mode.value
        )

    @property
    def symbolic(self) -> ExactMatrix:
        with self._lock:
            if self._symbolic is None:
                self._symbolic = symbolic_join_jacobian(self.join)
            return self._symbolic

    def sampled_rank(self, subset: Subset) -> int:
        columns = sorted(subset)
        ceiling = min(len(columns), self.matrices[0].nrows)
        best = 0
        for matrix in self.matrices:
            best = max(best, rank_mod_p(matrix.select_columns(columns)))
            if best == ceiling:
                break
        return best

    def __call__(self, subset: Subset) -> int:
        rank = self.sampled_rank(subset)
        if self.cfg.verify_symbolic and rank < len(subset):
            exact = rank_symbolic(self.symbolic.select_columns(sorted(subset)))
            if exact != rank:
                with self._lock:
                    self.escalations += 1
                logger.warning(
                    "symbolic rank %d exceeds sampled rank %d on %s",
                    exact, rank, self.join.ground.labels_of(subset)
                )
            rank = exact
        return rank
