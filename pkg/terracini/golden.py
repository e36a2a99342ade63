"""
Golden replications of known matroid counts, dimensions and verdicts.

Each entry recomputes its values with a service and compares them with the
recorded ones. A failing entry is recomputed once with symbolic verification
before it is reported as a mismatch.
"""

import logging
from math import comb
from typing import Any, Callable, Dict, List

from core.exceptions import SpecError
from geometry.jacobian import jacobian_at, join_jacobian_at
from geometry.registry import THREEFOLD_POINTS, builtin
from geometry.sampler import Sampler, sample_points
from geometry.specs import JoinSpec
from exactlin.rank import rank_mod_p
from polytope.lattice import dilated_simplex, grid, hull_points, product, toric_from_points
from polytope.scan import two_delta
from terracini.models import GoldenCheck, GoldenReport
from terracini.service import TerraciniService

logger = logging.getLogger(__name__)

GoldenFn = Callable[[TerraciniService], List[GoldenCheck]]


def _check(label: str, expected: Any, actual: Any) -> GoldenCheck:
    return GoldenCheck(label=label, expected=expected, actual=actual, passed=expected == actual)


def _base_count(service: TerraciniService, spec) -> int:
    return len(service.algebraic_matroid(spec).enumerate_bases(service.cfg.enumeration_cap))


def table1(service: TerraciniService) -> List[GoldenCheck]:
    expected = {
        "table1_x1": (141, 104, 10),
        "table1_x2": (125, 100, 10),
        "table1_x3": (210, 120, 10),
    }
    checks = []
    for name, counts in expected.items():
        spec = builtin(name)
        for s, count in enumerate(counts, start=1):
            checks.append(_check(f"{name} s={s} bases", count, _base_count(service, JoinSpec.secant(spec, s))))
    return checks


def cubic_veronese(service: TerraciniService) -> List[GoldenCheck]:
    spec = builtin("veronese", n=2, d=3)
    join = JoinSpec.secant(spec, 2)
    matroid = service.algebraic_matroid(spec)
    secant = service.join_matroid(join)
    report = service.union_check(join)
    return [
        _check("M(X) rank", 3, matroid.full_rank),
        _check("M(X) bases", 105, _base_count(service, spec)),
        _check("M(X^2) rank", 6, secant.full_rank),
        _check("M(X^2) bases", 207, _base_count(service, join)),
        _check("2M(X) bases", 210, report.union_base_count),
        _check(
            "missing bases",
            [
                ["z0", "z1", "z2", "z4", "z5", "z7"],
                ["z1", "z2", "z3", "z5", "z6", "z8"],
                ["z4", "z5", "z6", "z7", "z8", "z9"],
            ],
            [m.subset for m in report.missing_bases],
        ),
    ]


def veronese_corollary(service: TerraciniService) -> List[GoldenCheck]:
    checks = []
    for d in (3, 4, 5):
        report = service.pattern_scan(dilated_simplex(2, d), two_delta(), verdicts=d <= 4)
        checks.append(_check(f"d={d} 2-simplex translates", comb(d, 2), report.match_count))
        if d <= 4:
            missing = sum(bool(m.missing_basis) for m in report.matches)
            checks.append(_check(f"d={d} translates missing from M(X^2)", report.match_count, missing))
    return checks


def laface(service: TerraciniService) -> List[GoldenCheck]:
    spec = builtin("p1xp1_23")
    join = JoinSpec.secant(spec, 2)
    field = service.cfg.prime_field
    point = (4, 2, 1)
    # Displayed column k is the point (k % 4, k // 4); rows differentiate by t1, t2, t0.
    displayed = [
        [0, 1, 8, 48, 0, 2, 16, 96, 0, 4, 32, 192],
        [0, 0, 0, 0, 1, 4, 16, 64, 4, 16, 64, 256],
        [1, 4, 16, 64, 2, 8, 32, 128, 4, 16, 64, 256],
    ]
    jac = jacobian_at(spec, point, field)
    reordered = [[row[(k % 4) * 3 + k // 4] for k in range(12)] for row in jac.tolist()]

    subgroup = Sampler.subgroup([(2, 1), (1, 1)], base=2)
    stacked = join_jacobian_at(join, sample_points(subgroup, join, 0, field), field)
    low = service.with_sampler(subgroup)
    high = service.with_sampler(Sampler.subgroup([(5, 2), (1, 1)], base=3))
    low_matroid = low.join_matroid(join)
    return [
        _check("tangent rows at subgroup point (2,1), a=2", displayed, reordered),
        _check("stacked rank", 6, low_matroid.full_rank),
        _check("stacked rank mod p", 6, rank_mod_p(stacked)),
        _check("subgroup (2,1),(1,1), a=2 bases", 486, _base_count(low, join)),
        _check("subgroup (5,2),(1,1), a=3 bases", 916, _base_count(high, join)),
        _check("generic bases", 916, _base_count(service, join)),
        _check("Terracini union", False, service.union_check(join).is_terracini_union),
    ]


def threefold(service: TerraciniService) -> List[GoldenCheck]:
    spec = builtin("threefold_p")
    matroid = service.algebraic_matroid(spec)
    defect = service.defect(JoinSpec.secant(spec, 2))
    vertices = [(0, 0, 1), (1, 0, 2), (0, 2, 1), (2, 2, 1), (1, 1, 0)]
    hull = hull_points(vertices)
    bigger = hull_points(vertices + [(1, 0, 1)])
    q_spec = toric_from_points(bigger, name="threefold_Q")
    return [
        _check("hull lattice points", sorted(THREEFOLD_POINTS), list(hull.points)),
        _check("dimension", 4, matroid.full_rank),
        _check("first four columns a basis", True, matroid.is_independent(range(4))),
        _check("last four columns a basis", True, matroid.is_independent(range(4, 8))),
        _check("2-secant defective", True, defect.defective),
        _check("2-secant dimension below 8", True, defect.actual_dim < 8),
        _check("P is a Terracini union", False, service.union_check(JoinSpec.secant(spec, 2)).is_terracini_union),
        _check("Q is a Terracini union", False, service.union_check(JoinSpec.secant(q_spec, 2)).is_terracini_union),
    ]


def nonnormal(service: TerraciniService) -> List[GoldenCheck]:
    spec = builtin("p1xp2_12")
    points = product(grid([1]), dilated_simplex(2, 2))
    projection = [(0, 0, 0), (0, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2), (1, 0, 0), (1, 1, 0), (1, 0, 1)]
    subset = spec.ground.labels_of(points.indices_of(projection))
    report = service.union_check(JoinSpec.secant(spec, 2))
    witness = next((m.witness for m in report.missing_bases if m.subset == subset), None)
    return [
        _check("Terracini union", False, report.is_terracini_union),
        _check("projection is a missing basis", True, witness is not None),
        _check("projected join defective", True, witness is not None and witness.defective),
    ]


def bolker_roth(service: TerraciniService) -> List[GoldenCheck]:
    sym = builtin("sym_rank_one", n=8)
    join = JoinSpec.secant(sym, 2)
    block = [f"a{i}_{j}" for i in range(1, 5) for j in range(5, 9)]
    defect = service.defect(join)
    projected = service.projected_join_defect(join, block)
    segre = service.defect(JoinSpec.secant(builtin("segre", m=4, n=4), 2))
    return [
        _check("dim S(8;1)", 8, service.dimension(sym)),
        _check("dim S(8;2)", 15, defect.actual_dim),
        _check("2-secant defect", 1, defect.defect),
        _check("rank of the off-diagonal block", 12, service.subset_rank(join, block)),
        _check("projected defect", 2, projected.defect),
        _check("Segre 2-secant dim", 12, segre.actual_dim),
        _check("Segre expected dim", 14, segre.expected_dim),
    ]


def rigidity(service: TerraciniService) -> List[GoldenCheck]:
    checks = []
    for d, n in ((1, 5), (2, 4), (2, 5), (3, 5)):
        rank = service.dimension(builtin("cayley_menger", d=d, n=n))
        checks.append(_check(f"rank CM_{d},{n}", d * n - comb(d + 1, 2), rank))
    for n in (4, 5):
        checks.append(_check(f"bases CM_1,{n}", n ** (n - 2), _base_count(service, builtin("cayley_menger", d=1, n=n))))
    planar = builtin("cayley_menger", d=2, n=4)
    join = JoinSpec.secant(builtin("cayley_menger", d=1, n=4), 2)
    certificates = service.subunion_verify(join)
    checks.append(_check("CM_2,4 bases", _base_count(service, planar), len(certificates)))
    checks.append(_check("CM_2,4 equals the 2-secant of CM_1,4", service.dimension(planar), service.dimension(join)))
    return checks


def coloop_extension(service: TerraciniService) -> List[GoldenCheck]:
    spec = builtin("coloop_extension")
    join = JoinSpec.secant(spec, 2)
    cone = service.cone_analysis(spec)
    secant = service.join_report(join, with_bases=True)
    return [
        _check("M(X') rank", 3, cone.rank),
        _check("M(X') bases", 10, _base_count(service, spec)),
        _check("coloops", ["z6"], cone.coloops),
        _check("M(X'^2) rank", 5, secant.matroid.rank),
        _check("M(X'^2) bases", 5, secant.matroid.base_count),
        _check("M(X'^2) coloops", ["z6"], secant.matroid.coloops),
        _check("Terracini union", True, service.union_check(join).is_terracini_union),
        _check("defect", 1, secant.defect.defect),
    ]


def curves(service: TerraciniService) -> List[GoldenCheck]:
    checks = []
    for n in (5, 6, 7, 8):
        spec = builtin("rational_normal_curve_generic", deg=n - 1, seed=0)
        for s in (1, 2, 3):
            r = min(2 * s, n)
            join = JoinSpec.secant(spec, s)
            checks.append(_check(f"N={n} s={s} rank", r, service.dimension(join)))
            checks.append(_check(f"N={n} s={s} bases", comb(n, r), _base_count(service, join)))
    return checks


def lines(service: TerraciniService) -> List[GoldenCheck]:
    join = builtin("example13_lines")
    return [
        _check("line ranks", [1, 1], [service.dimension(s) for s in join.summands]),
        _check("join rank", 2, service.dimension(join)),
        _check("join bases", 3, _base_count(service, join)),
    ]


def two_by_two(service: TerraciniService) -> List[GoldenCheck]:
    # The image is the hypersurface z1 z4 = z2 z3, so its matroid is uniform(4, 3).
    spec = builtin("two_by_two_map")
    field = service.cfg.prime_field
    general = service.with_sampler(Sampler.explicit([(1, 1, 1, 1)]))
    special = service.with_sampler(Sampler.explicit([(1, 0, 1, 0)]))
    special_matroid = special.algebraic_matroid(spec)
    # Displayed rows are the gradients of su, sv, tu, tv.
    displayed = [[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]]
    jac = jacobian_at(spec, (1, 1, 1, 1), field)
    return [
        _check("differential at (1,1,1,1)", displayed, jac.transpose().tolist()),
        _check("rank at (1,1,1,1)", 3, general.dimension(spec)),
        _check("bases at (1,1,1,1)", 4, _base_count(general, spec)),
        _check("generic bases", 4, _base_count(service, spec)),
        _check("loops at (1,0,1,0)", ["z4"], special_matroid.ground.labels_of(special_matroid.loops_and_coloops()[0])),
        _check("bases at (1,0,1,0)", 1, _base_count(special, spec)),
    ]



GOLDEN: Dict[str, GoldenFn] = {
    "table1": table1,
    "cubic-veronese": cubic_veronese,
    "veronese-corollary": veronese_corollary,
    "laface": laface,
    "threefold": threefold,
    "nonnormal": nonnormal,
    "bolker-roth": bolker_roth,
    "rigidity": rigidity,
    "coloop-extension": coloop_extension,
    "curves": curves,
    "lines": lines,
    "two-by-two": two_by_two,
}


def golden_names() -> List[str]:
    return list(GOLDEN)


def run_golden(name: str, service: TerraciniService) -> GoldenReport:
    """
    Recompute one golden entry.

    Raises:
        SpecError: unknown entry
    """
    fn = GOLDEN.get(name)
    if fn is None:
        raise SpecError(f"unknown example '{name}'; known: {', '.join(GOLDEN)}, all")
    checks = fn(service)
    rechecked = False
    if not all(c.passed for c in checks) and not service.cfg.verify_symbolic:
        failed = [c.label for c in checks if not c.passed]
        logger.warning("%s: %s mismatched; rechecking symbolically", name, failed)
        checks = fn(service.with_config(verify_symbolic=True))
        rechecked = True
    return GoldenReport(
        name=name,
        passed=all(c.passed for c in checks),
        rechecked_symbolically=rechecked,
        checks=checks,
    )
