"""
Core analysis service for algebraic matroids of joins.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from core.exceptions import SamplingAnomaly, SpecError
from exactlin.matrix import ExactMatrix
from geometry.sampler import Sampler
from geometry.specs import JoinSpec, ToricSpec, VarietySpec
from matroid.base import Element, Matroid, Provenance
from matroid.constructors import column_matroid
from matroid.models import PartitionDocument
from matroid.order import weak_order_leq, weak_order_strict
from matroid.union import PartitionCertificate, PartitionFailure, matroid_union, partition_certificate
from polytope.lattice import LatticePointSet, toric_from_points
from polytope.scan import scan_pattern
from terracini.config import MatroidComputationConfig
from terracini.models import (
    ColoopCheck,
    ConeReport,
    DefectReport,
    JoinReport,
    MatroidReport,
    MissingBasis,
    SandwichReport,
    ScanMatch,
    ScanReport,
    UnionCheckReport,
)
from terracini.oracle import JacobianRankOracle

logger = logging.getLogger(__name__)

AnySpec = Union[VarietySpec, JoinSpec]


class TerraciniService:
    """
    Service that computes algebraic matroids of varieties and joins:
    1. Build matroids from exponent matrices or sampled Jacobians
    2. Compare the join matroid with the union of the summand matroids
    3. Explain each discrepancy by a defective projected join
    """

    def __init__(self, cfg: Optional[MatroidComputationConfig] = None):
        """
        Initialize the service.

        Args:
            cfg: Computation config (defaults from settings)
        """
        self.cfg = cfg or MatroidComputationConfig.from_settings()
        self._matroids: Dict[Tuple[JoinSpec, Sampler], Matroid] = {}

    def with_config(self, **changes) -> "TerraciniService":
        """A fresh service whose config differs in the given fields."""
        return TerraciniService(replace(self.cfg, **changes))

    def with_sampler(self, sampler: Sampler) -> "TerraciniService":
        return self.with_config(sampler=sampler)

    # Matroids

    def algebraic_matroid(self, spec: AnySpec, sampler: Optional[Sampler] = None) -> Matroid:
        """
        Algebraic matroid of a variety (or of a join given as such).

        Toric specs use the exact column matroid of the homogenized exponent
        matrix; everything else goes through the sampled Jacobian, using
        ``sampler`` in place of the configured one when given.
        """
        join = JoinSpec.of(spec)
        sampler = sampler or self.cfg.sampler
        key = (join, sampler)
        cached = self._matroids.get(key)
        if cached is not None:
            return cached

        if join.s == 1 and isinstance(join.summands[0], ToricSpec):
            toric = join.summands[0]
            matroid = column_matroid(ExactMatrix.rational(toric.matrix), toric.labels)
            matroid.parameters.update({"spec": toric.name or "toric"})
        else:
            oracle = JacobianRankOracle(join, self.cfg.with_sampler(sampler))
            matroid = Matroid(
                join.ground,
                oracle,
                Provenance.JACOBIAN,
                {
                    "spec": join.name or ", ".join(s.name or type(s).__name__ for s in join.summands),
                    "s": join.s,
                    "sampler": sampler.mode.value,
                    "seed": sampler.seed,
                    "trials": 1 if sampler.is_deterministic else self.cfg.trials,
                    "prime": self.cfg.prime,
                },
            )
        self._matroids[key] = matroid
        return matroid

    def join_matroid(self, join: JoinSpec) -> Matroid:
        return self.algebraic_matroid(join)

    def secant_matroid(self, spec: VarietySpec, s: int) -> Matroid:
        return self.join_matroid(JoinSpec.secant(spec, s))

    def summand_matroids(self, join: JoinSpec) -> List[Matroid]:
        # Summand k alone sees the k-th point or direction of a deterministic sampler.
        sampler = self.cfg.sampler
        return [self.algebraic_matroid(spec, sampler.summand(k)) for k, spec in enumerate(join.summands)]

    def union_matroid(self, join: JoinSpec) -> Matroid:
        """M(X_1) v ... v M(X_s)."""
        return matroid_union(self.summand_matroids(join))

    # Dimensions

    def dimension(self, spec: AnySpec) -> int:
        return self.algebraic_matroid(spec).full_rank

    def defect(self, join: AnySpec) -> DefectReport:
        join = JoinSpec.of(join)
        expected = min(sum(m.full_rank for m in self.summand_matroids(join)), join.n_coords)
        return DefectReport.from_dims(self.dimension(join), expected)

    def subset_rank(self, join: AnySpec, subset: Iterable[Element]) -> int:
        """Dimension of the closure of the projection of the join onto E."""
        matroid = self.algebraic_matroid(join)
        return matroid.rank(matroid.ground.subset(subset))

    def projected_join_defect(self, join: AnySpec, subset: Iterable[Element]) -> DefectReport:
        """
        Defect of the join of the projections onto E.

        Raises:
            SpecError: for an empty subset or unknown labels
        """
        join = JoinSpec.of(join)
        key = join.ground.subset(subset)
        if not key:
            raise SpecError("projection needs a nonempty coordinate subset")
        restricted = sum(m.rank(key) for m in self.summand_matroids(join))
        return DefectReport.from_dims(self.subset_rank(join, key), min(restricted, len(key)))

    # Reports

    def matroid_report(self, matroid: Matroid, name: Optional[str] = None, with_bases: bool = False) -> MatroidReport:
        ground = matroid.ground
        loops, coloops = matroid.loops_and_coloops()
        bases = matroid.enumerate_bases(self.cfg.enumeration_cap) if with_bases else None
        return MatroidReport(
            name=name,
            ground=list(ground.labels),
            rank=matroid.full_rank,
            base_count=len(bases) if bases is not None else None,
            bases=[ground.labels_of(b) for b in bases] if bases is not None else None,
            loops=ground.labels_of(loops),
            coloops=ground.labels_of(coloops),
            provenance=matroid.provenance.value,
        )

    def join_report(self, join: AnySpec, with_bases: bool = False) -> JoinReport:
        join = JoinSpec.of(join)
        matroid = self.join_matroid(join)
        return JoinReport(
            s=join.s,
            matroid=self.matroid_report(matroid, join.name, with_bases),
            defect=self.defect(join),
        )

    def _independence(self, matroid: Matroid, bases: Sequence[Tuple[int, ...]]) -> List[bool]:
        # Ranks are memoized per matroid; map keeps input order.
        workers = min(self.cfg.workers, max(1, len(bases)))
        if workers == 1:
            return [matroid.is_independent(b) for b in bases]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(matroid.is_independent, bases))

    def union_check(self, join: AnySpec) -> UnionCheckReport:
        """
        Decide whether the join matroid is the union of the summand matroids.

        Every basis of the union that is dependent in the join matroid is
        reported with the defect of the projected join onto it, which must be
        positive.

        Raises:
            EnumerationCapExceeded: ground set too large to enumerate
            SamplingAnomaly: a missing basis whose projected join is not defective
        """
        join = JoinSpec.of(join)
        union = self.union_matroid(join)
        joined = self.join_matroid(join)
        union_bases = union.enumerate_bases(self.cfg.enumeration_cap)
        logger.info("checking %d bases of the union against the join", len(union_bases))

        verdicts = self._independence(joined, union_bases)
        missing = []
        for basis, independent in zip(union_bases, verdicts):
            if independent:
                continue
            witness = self.projected_join_defect(join, basis)
            if not witness.defective:
                raise SamplingAnomaly(
                    f"{join.ground.labels_of(basis)} is dependent in the join but its projected join "
                    "is not defective; re-run with more trials or --verify-symbolic",
                    subset=tuple(basis),
                )
            missing.append(MissingBasis(subset=join.ground.labels_of(basis), witness=witness))

        rank_gap = union.full_rank - joined.full_rank
        if rank_gap:
            logger.info("union rank exceeds join rank by %d", rank_gap)
        return UnionCheckReport(
            union_rank=union.full_rank,
            join_rank=joined.full_rank,
            rank_gap=rank_gap,
            union_base_count=len(union_bases),
            join_base_count=len(joined.enumerate_bases(self.cfg.enumeration_cap)),
            is_terracini_union=not missing,
            missing_bases=missing,
        )

    def subunion_verify(self, join: AnySpec) -> List[PartitionCertificate]:
        """
        Partition every basis of the join matroid into summand-independent parts.

        Raises:
            SamplingAnomaly: a basis with no partition
        """
        join = JoinSpec.of(join)
        summands = self.summand_matroids(join)
        certificates = []
        for basis in self.join_matroid(join).enumerate_bases(self.cfg.enumeration_cap):
            result = partition_certificate(summands, basis)
            if isinstance(result, PartitionFailure):
                raise SamplingAnomaly(
                    f"join basis {join.ground.labels_of(basis)} has union rank {result.union_rank}",
                    subset=tuple(basis),
                )
            certificates.append(result)
        return certificates

    def partition(self, join: AnySpec, subset: Iterable[Element]) -> PartitionDocument:
        join = JoinSpec.of(join)
        return partition_certificate(self.summand_matroids(join), subset).to_document(join.ground)

    def cone_analysis(self, spec: AnySpec) -> ConeReport:
        """
        Loops and coloops, and for a coloop the 2-secant dichotomy:
        the 2-secant fills the ambient space or the variety is defective.
        """
        matroid = self.algebraic_matroid(spec)
        ground = matroid.ground
        loops, coloops = matroid.loops_and_coloops()
        check = None
        if coloops:
            join = JoinSpec.of(spec)
            secant = JoinSpec(join.summands * 2)
            secant_dim = self.dimension(secant)
            ambient = ground.size
            defective = secant_dim < min(2 * matroid.full_rank, ambient)
            check = ColoopCheck(
                secant_dim=secant_dim,
                ambient_dim=ambient,
                fills_space=secant_dim == ambient,
                defective=defective,
                holds=secant_dim == ambient or defective,
            )
            if not check.holds:
                logger.warning("coloop dichotomy failed for %s; sampling is suspect", ground.labels_of(coloops))
        return ConeReport(
            rank=matroid.full_rank,
            loops=ground.labels_of(loops),
            coloops=ground.labels_of(coloops),
            coloop_check=check,
        )

    def weak_order_sandwich(self, join: AnySpec) -> SandwichReport:
        """Compare the join matroid with the union in the weak order."""
        join = JoinSpec.of(join)
        joined = self.join_matroid(join)
        union = self.union_matroid(join)
        cap = self.cfg.enumeration_cap
        return SandwichReport(
            join_base_count=len(joined.enumerate_bases(cap)),
            union_base_count=len(union.enumerate_bases(cap)),
            join_below_union=weak_order_leq(joined, union, cap),
            strict=weak_order_strict(joined, union, cap),
        )

    def pattern_scan(self, points: LatticePointSet, pattern: LatticePointSet, verdicts: bool = True) -> ScanReport:
        """
        Translates of ``pattern`` inside ``points``, each optionally judged
        against the 2-secant of the toric variety of ``points``.

        A match is a missing basis when it is independent in 2M(X) but
        dependent in M(X^2).
        """
        matches = scan_pattern(points, pattern)
        spec = toric_from_points(points)
        union = secant = None
        if verdicts and matches:
            union = matroid_union([self.algebraic_matroid(spec)] * 2)
            secant = self.secant_matroid(spec, 2)
        rows = []
        for match in matches:
            row = ScanMatch(offset=list(match.offset), subset=spec.ground.labels_of(match.indices))
            if union is not None:
                row.union_independent = union.is_independent(match.indices)
                row.join_dependent = not secant.is_independent(match.indices)
                row.missing_basis = (
                    row.union_independent and row.join_dependent and len(match.indices) == union.full_rank
                )
            rows.append(row)
        return ScanReport(pattern_size=len(pattern), match_count=len(rows), matches=rows)
