"""
Builtin varieties.

Every entry returns a spec whose coordinates, labels and order are fixed and
documented, so base lists and subsets can be quoted against them.
"""

import inspect
import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Union

from core.exceptions import SpecError
from exactlin.polynomial import SparsePolynomial, polynomial_sum
from geometry.specs import JoinSpec, LinearChangeSpec, PolyMapSpec, ToricSpec, VarietySpec

logger = logging.getLogger(__name__)

AnySpec = Union[VarietySpec, JoinSpec]

THREEFOLD_POINTS = (
    (0, 0, 1), (1, 0, 2), (0, 2, 1), (2, 2, 1),
    (1, 1, 0), (1, 1, 1), (1, 2, 1), (0, 1, 1),
)


@dataclass(frozen=True)
class RegistryEntry:
    name: str
    factory: Callable[..., AnySpec]
    description: str


def _pair_label(prefix: str, i: int, j: int, n: int) -> str:
    return f"{prefix}{i}{j}" if n <= 9 else f"{prefix}{i}_{j}"


def veronese(n: int = 2, d: int = 3) -> ToricSpec:
    """
    Degree-d Veronese of P^n as a toric cone.

    Coordinates follow the lexicographic order of the dilated simplex; point
    (i, j) of the plane is the monomial t^i s^j, so for n=2, d=3 the order is
    [1 : s : s^2 : s^3 : t : st : s^2t : t^2 : st^2 : t^3]. Labels z0, z1, ...
    """
    from polytope.lattice import dilated_simplex, toric_from_points

    points = dilated_simplex(n, d)
    labels = tuple(f"z{i}" for i in range(len(points)))
    return toric_from_points(points, labels=labels, name=f"veronese({n},{d})")


def cayley_menger(d: int = 1, n: int = 5) -> PolyMapSpec:
    """Squared distances (p_i - p_j)^2 of n points in R^d, pairs i < j in lex order."""
    if d < 1 or n < 2:
        raise SpecError(f"need d >= 1 and n >= 2, got d={d}, n={n}")
    if d == 1:
        names = [f"p{i}" for i in range(1, n + 1)]
    else:
        names = [f"p{i}_{k}" for i in range(1, n + 1) for k in range(1, d + 1)]
    nvars = len(names)

    def coordinate(i: int, k: int) -> SparsePolynomial:
        return SparsePolynomial.variable(nvars, (i - 1) * d + k)

    components, labels = [], []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            components.append(polynomial_sum(((coordinate(i, k) - coordinate(j, k)) ** 2 for k in range(d)), nvars))
            labels.append(_pair_label("z", i, j, n))
    return PolyMapSpec(tuple(names), tuple(components), tuple(labels), name=f"cayley_menger({d},{n})")


def sym_rank_one(n: int = 8) -> ToricSpec:
    """Symmetric rank-one n x n matrices x x^T; entries a{i}_{j} for i <= j."""
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    exponents = tuple(
        tuple((i == k) + (j == k) for i, j in pairs)
        for k in range(n)
    )
    labels = tuple(f"a{i + 1}_{j + 1}" for i, j in pairs)
    return ToricSpec(exponents, homogenize=False, labels=labels, name=f"sym_rank_one({n})")


def segre(m: int = 4, n: int = 4) -> ToricSpec:
    """Rank-one m x n matrices x y^T; entries b{i}_{j}."""
    pairs = [(i, j) for i in range(m) for j in range(n)]
    exponents = tuple(tuple(int(i == k) for i, _ in pairs) for k in range(m))
    exponents += tuple(tuple(int(j == k) for _, j in pairs) for k in range(n))
    labels = tuple(f"b{i + 1}_{j + 1}" for i, j in pairs)
    return ToricSpec(exponents, homogenize=False, labels=labels, name=f"segre({m},{n})")


def rational_normal_curve(deg: int = 4) -> ToricSpec:
    """Coordinates t^k for k = 0..deg, homogenized; labels z1..z{deg+1}."""
    return ToricSpec(((tuple(range(deg + 1))),), name=f"rational_normal_curve({deg})")


def rational_normal_curve_generic(deg: int = 4, seed: int = 0) -> LinearChangeSpec:
    return LinearChangeSpec.from_seed(
        rational_normal_curve(deg), seed, name=f"rational_normal_curve_generic({deg},{seed})"
    )


def coloop_extension(deg: int = 4, seed: int = 0) -> PolyMapSpec:
    """A generic rational normal curve times a free line; the new coordinate is z{deg+2}."""
    curve = rational_normal_curve_generic(deg, seed).polymap
    extended = curve.extend_with_cone_coordinate("w")
    return PolyMapSpec(extended.variables, extended.components, extended.labels, name=f"coloop_extension({deg},{seed})")


def p1xp2_12() -> ToricSpec:
    """P^1 x P^2 embedded by O(1,2): the points [0,1] x 2*simplex."""
    from polytope.lattice import dilated_simplex, grid, product, toric_from_points

    return toric_from_points(product(grid([1]), dilated_simplex(2, 2)), name="p1xp2_12")


def p1xp1_23() -> ToricSpec:
    """P^1 x P^1 embedded by O(2,3): the 3 x 2 lattice rectangle."""
    from polytope.lattice import grid, toric_from_points

    return toric_from_points(grid([3, 2]), name="p1xp1_23")


def threefold_P() -> ToricSpec:
    """The 2-defective threefold, columns in the listed point order."""
    exponents = tuple(tuple(p[k] for p in THREEFOLD_POINTS) for k in range(3))
    return ToricSpec(exponents, name="threefold_P")


def example13_lines() -> JoinSpec:
    """Two lines through the origin of A^3; their join is a plane."""
    first = PolyMapSpec.from_text(["t"], ["t", "t", "t"], name="line(1,1,1)")
    second = PolyMapSpec.from_text(["t"], ["t", "-t", "2*t"], name="line(1,-1,2)")
    return JoinSpec((first, second), name="example13_lines")


def two_by_two_map() -> PolyMapSpec:
    """(s, t, u, v) -> (su, sv, tu, tv): rank-one 2 x 2 matrices."""
    return PolyMapSpec.from_text(
        ["s", "t", "u", "v"], ["s*u", "s*v", "t*u", "t*v"], name="two_by_two_map"
    )


def _table1_pairs():
    return [(i, j) for i in range(1, 6) for j in range(i + 1, 6)]


def table1_x1() -> ToricSpec:
    """Quadratic Veronese of P^3 in monomials: z_ij = x_i x_j (j <= 4), z_i5 = x_i^2."""
    pairs = _table1_pairs()
    exponents = tuple(
        tuple(2 * (i == k) if j == 5 else (i == k) + (j == k) for i, j in pairs)
        for k in range(1, 5)
    )
    labels = tuple(f"z{i}{j}" for i, j in pairs)
    return ToricSpec(exponents, homogenize=False, labels=labels, name="table1_x1")


def table1_x2() -> PolyMapSpec:
    spec = cayley_menger(1, 5)
    return PolyMapSpec(spec.variables, spec.components, spec.labels, name="table1_x2")


def table1_x2_minors() -> PolyMapSpec:
    """Coordinates in which the variety is cut out by the symmetric matrix of linear forms."""
    names = ["x1", "x2", "x3", "x4"]
    components = [
        f"x{i}^2/2" if j == 5 else f"(x{i} - x{j})^2/2"
        for i, j in _table1_pairs()
    ]
    labels = [f"z{i}{j}" for i, j in _table1_pairs()]
    return PolyMapSpec.from_text(names, components, labels, name="table1_x2_minors")


def table1_x3(seed: int = 0) -> LinearChangeSpec:
    return LinearChangeSpec.from_seed(table1_x1(), seed, name=f"table1_x3({seed})")


REGISTRY: Dict[str, RegistryEntry] = {
    entry.name: entry
    for entry in (
        RegistryEntry("veronese", veronese, "Veronese cone of P^n in degree d (params n, d)"),
        RegistryEntry("cayley_menger", cayley_menger, "Cayley-Menger variety CM_{d,n} (params d, n)"),
        RegistryEntry("sym_rank_one", sym_rank_one, "Symmetric rank-one n x n matrices (param n)"),
        RegistryEntry("segre", segre, "Rank-one m x n matrices (params m, n)"),
        RegistryEntry("rational_normal_curve", rational_normal_curve, "Monomial rational normal curve (param deg)"),
        RegistryEntry(
            "rational_normal_curve_generic",
            rational_normal_curve_generic,
            "Rational normal curve in seeded generic coordinates (params deg, seed)",
        ),
        RegistryEntry("coloop_extension", coloop_extension, "Generic rational normal curve times a line (params deg, seed)"),
        RegistryEntry("p1xp2_12", p1xp2_12, "P^1 x P^2 embedded by O(1,2)"),
        RegistryEntry("p1xp1_23", p1xp1_23, "P^1 x P^1 embedded by O(2,3)"),
        RegistryEntry("threefold_p", threefold_P, "2-defective toric threefold on eight lattice points"),
        RegistryEntry("example13_lines", example13_lines, "Join of two lines in A^3"),
        RegistryEntry("two_by_two_map", two_by_two_map, "Rank-one 2 x 2 matrices as a polynomial map"),
        RegistryEntry("table1_x1", table1_x1, "Quadratic Veronese of P^3, monomial coordinates"),
        RegistryEntry("table1_x2", table1_x2, "Cayley-Menger variety CM_{1,5}"),
        RegistryEntry("table1_x2_minors", table1_x2_minors, "Quadratic Veronese of P^3, halved squared differences"),
        RegistryEntry("table1_x3", table1_x3, "Quadratic Veronese of P^3, seeded generic coordinates (param seed)"),
    )
}


def normalize_name(name: str) -> str:
    return name.strip().lower().replace("-", "_")


def _coerce(value):
    if isinstance(value, str):
        try:
            return int(value)
        except ValueError:
            return value
    return value


def builtin(name: str, **params) -> AnySpec:
    """
    Look up a builtin variety.

    Args:
        name: Registry name; case and '-' versus '_' are ignored.
        **params: Factory parameters; integer strings are converted.

    Returns:
        The variety or join spec.

    Raises:
        SpecError: for unknown names or parameters.
    """
    key = normalize_name(name)
    entry = REGISTRY.get(key)
    if entry is None:
        raise SpecError(f"unknown builtin '{name}'; known: {', '.join(sorted(REGISTRY))}")
    params = {k: _coerce(v) for k, v in params.items()}
    accepted = inspect.signature(entry.factory).parameters
    unknown = sorted(set(params) - set(accepted))
    if unknown:
        raise SpecError(f"builtin '{entry.name}' does not take {', '.join(unknown)}")
    logger.debug("building builtin %s with %s", entry.name, params)
    return entry.factory(**params)


def list_builtins() -> List[RegistryEntry]:
    return sorted(REGISTRY.values(), key=lambda entry: entry.name)
