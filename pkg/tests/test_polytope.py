import json
from math import comb

import pytest

from core.exceptions import SpecError
from geometry.registry import THREEFOLD_POINTS
from polytope import (
    LatticePointSet,
    dilated_simplex,
    grid,
    hull_points,
    product,
    scan_pattern,
    toric_from_points,
    two_delta,
)
from polytope.schema import load_polytope, load_polytope_file


class TestLatticePointSet:
    def test_sorted_and_distinct(self):
        points = LatticePointSet.of([(1, 0), (0, 1), (1, 0)])
        assert points.points == ((0, 1), (1, 0))
        assert len(points) == 2
        assert (1, 0) in points
        assert points.index_of((1, 0)) == 1

    def test_mixed_dimension(self):
        with pytest.raises(SpecError):
            LatticePointSet(2, ((0, 0), (1, 0, 0)))

    def test_missing_point(self):
        with pytest.raises(SpecError):
            grid([1, 1]).index_of((5, 5))

    def test_indices_are_sorted(self):
        assert grid([2]).indices_of([(2,), (0,)]) == (0, 2)

    @pytest.mark.parametrize("n, d", [(1, 4), (2, 2), (2, 3), (3, 2), (3, 3)])
    def test_simplex_counts(self, n, d):
        assert len(dilated_simplex(n, d)) == comb(n + d, d)

    def test_grid(self):
        points = grid([3, 2])
        assert len(points) == 12
        assert points.index_of((1, 0)) == 3

    def test_product(self):
        points = product(grid([1]), dilated_simplex(2, 2))
        assert points.dim == 3
        assert len(points) == 12
        projection = [(0, 0, 0), (0, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2), (1, 0, 0), (1, 1, 0), (1, 0, 1)]
        assert points.indices_of(projection) == (0, 1, 2, 4, 5, 6, 7, 9)

    def test_translate(self):
        assert grid([1]).translate([3]).points == ((3,), (4,))
        with pytest.raises(SpecError):
            grid([1]).translate([1, 1])


class TestHull:
    def test_triangle(self):
        assert hull_points([(0, 0), (2, 0), (0, 2)]) == dilated_simplex(2, 2)

    def test_single_vertex(self):
        assert hull_points([(1, 2, 3)]).points == ((1, 2, 3),)

    def test_threefold(self):
        vertices = [(0, 0, 1), (1, 0, 2), (0, 2, 1), (2, 2, 1), (1, 1, 0)]
        assert hull_points(vertices).points == tuple(sorted(THREEFOLD_POINTS))

    def test_segment_skips_nothing(self):
        assert len(hull_points([(0, 0), (3, 3)])) == 4

    def test_dimension_limit(self):
        with pytest.raises(SpecError):
            hull_points([(0, 0, 0, 0), (1, 0, 0, 0)])

    def test_empty(self):
        with pytest.raises(SpecError):
            hull_points([])


class TestScan:
    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_two_simplex_translates(self, d):
        assert len(scan_pattern(dilated_simplex(2, d), two_delta())) == comb(d, 2)

    def test_grid_translates(self):
        matches = scan_pattern(grid([3, 2]), two_delta())
        assert [m.offset for m in matches] == [(0, 0), (1, 0)]
        assert matches[0].indices == (0, 1, 2, 3, 4, 6)

    def test_translation_invariance(self):
        points = dilated_simplex(2, 4)
        moved = points.translate((5, -2))
        original = scan_pattern(points, two_delta())
        shifted = scan_pattern(moved, two_delta())
        assert [m.indices for m in original] == [m.indices for m in shifted]
        assert [m.offset for m in shifted] == [(o[0] + 5, o[1] - 2) for o in (m.offset for m in original)]

    def test_no_match(self):
        assert scan_pattern(dilated_simplex(2, 1), two_delta()) == []

    def test_dimension_mismatch(self):
        with pytest.raises(SpecError):
            scan_pattern(grid([2, 2, 2]), two_delta(2))


class TestToricFromPoints:
    def test_rows_are_coordinates(self):
        spec = toric_from_points(grid([1, 1]))
        assert spec.exponents == ((0, 0, 1, 1), (0, 1, 0, 1))
        assert spec.labels == ("z1", "z2", "z3", "z4")
        assert spec.homogenize

    def test_custom_labels(self):
        spec = toric_from_points(grid([1]), homogenize=False, labels=["a", "b"])
        assert spec.labels == ("a", "b")
        assert spec.n_params == 1


class TestSchema:
    def test_simplex(self):
        assert load_polytope({"type": "simplex", "dim": 2, "degree": 3}) == dilated_simplex(2, 3)

    def test_product_of_grid_and_simplex(self):
        document = {
            "type": "product",
            "factors": [{"type": "grid", "box": [1]}, {"type": "simplex", "dim": 2, "degree": 2}],
        }
        assert len(load_polytope(json.dumps(document))) == 12

    def test_hull(self):
        document = {"type": "hull", "vertices": [[0, 0], [2, 0], [0, 2]]}
        assert len(load_polytope(document)) == 6

    def test_points(self):
        points = load_polytope({"type": "points", "dim": 1, "points": [[2], [0]]})
        assert points.points == ((0,), (2,))

    def test_invalid(self):
        with pytest.raises(SpecError):
            load_polytope({"type": "simplex", "dim": 0, "degree": 2})

    def test_file(self, tmp_path):
        path = tmp_path / "grid.json"
        path.write_text(json.dumps({"type": "grid", "box": [3, 2]}))
        assert len(load_polytope_file(path)) == 12
