import json
import logging

import pytest

from core.exceptions import SpecError
from exactlin import rank_mod_p, rank_symbolic
from geometry import (
    JoinSpec,
    LinearChangeSpec,
    PolyMapSpec,
    Sampler,
    ToricSpec,
    builtin,
    compose_linear,
    jacobian_at,
    join_jacobian_at,
    random_invertible_matrix,
    sample_points,
    symbolic_join_jacobian,
)
from geometry.registry import list_builtins
from geometry.schema import load_spec, load_spec_file


def _stacked_rank(join, sampler, field, trial=0):
    return rank_mod_p(join_jacobian_at(join, sample_points(sampler, join, trial, field), field))


class TestSpecs:
    def test_toric_homogenizing_row_is_last(self):
        spec = ToricSpec(((0, 1, 2),))
        assert spec.matrix == ((0, 1, 2), (1, 1, 1))
        assert spec.n_params == 2
        assert spec.labels == ("z1", "z2", "z3")

    def test_ragged_exponents(self):
        with pytest.raises(SpecError):
            ToricSpec(((0, 1), (1,)))

    def test_repeated_columns_warn(self, caplog):
        with caplog.at_level(logging.WARNING, logger="geometry.specs"):
            ToricSpec(((0, 1, 1),))
        assert "repeated columns" in caplog.text

    def test_polymap_from_text(self):
        spec = PolyMapSpec.from_text(["s", "t"], ["s^2", "s*t", "t^2"], labels=["a", "b", "c"])
        assert spec.n_coords == 3
        assert spec.n_params == 2
        assert spec.ground.labels == ("a", "b", "c")

    def test_polymap_rejects_all_zero(self):
        with pytest.raises(SpecError):
            PolyMapSpec.from_text(["s"], ["0", "s - s"])

    def test_bad_label_count(self):
        with pytest.raises(SpecError):
            PolyMapSpec.from_text(["s"], ["s", "s^2"], labels=["a"])

    def test_laurent_spec_has_no_polymap(self):
        with pytest.raises(SpecError):
            ToricSpec(((1, -1, 0),)).to_polymap()

    def test_join_requires_common_labels(self):
        first = PolyMapSpec.from_text(["t"], ["t", "t"])
        second = PolyMapSpec.from_text(["t"], ["t", "t"], labels=["a", "b"])
        with pytest.raises(SpecError):
            JoinSpec((first, second))

    def test_secant_repeats_summand(self):
        spec = ToricSpec(((0, 1, 2),))
        join = JoinSpec.secant(spec, 3)
        assert join.s == 3
        assert join.distinct_summands() == (spec,)
        with pytest.raises(SpecError):
            JoinSpec.secant(spec, 0)

    def test_cone_coordinate(self):
        spec = PolyMapSpec.from_text(["t"], ["t", "t^2"]).extend_with_cone_coordinate("w")
        assert spec.variables == ("t", "w")
        assert spec.labels == ("z1", "z2", "z3")
        assert spec.components[-1].to_text(spec.variables) == "w"


class TestJacobian:
    def test_toric_entries(self, small_field):
        # Entry (j, i) is A[j][i] * t^{a_i} / t_j.
        spec = ToricSpec(((0, 1, 2),))
        assert jacobian_at(spec, (3, 5), small_field).tolist() == [[0, 5, 30], [1, 3, 9]]

    def test_toric_matches_polynomial_expansion(self, field):
        spec = builtin("veronese", n=2, d=3)
        point = sample_points(Sampler.generic(4), JoinSpec.of(spec), 0, field)[0]
        assert jacobian_at(spec, point, field) == jacobian_at(spec.to_polymap(), point, field)

    def test_toric_zero_parameter(self, small_field):
        with pytest.raises(SpecError):
            jacobian_at(ToricSpec(((0, 1, 2),)), (0, 1), small_field)

    def test_point_arity(self, small_field):
        with pytest.raises(SpecError):
            jacobian_at(builtin("two_by_two_map"), (1, 2, 3), small_field)

    def test_stacked_cubic_veronese(self, field):
        join = JoinSpec.secant(builtin("veronese"), 2)
        assert join_jacobian_at(join, sample_points(Sampler.generic(0), join, 0, field), field).shape == (6, 10)
        assert _stacked_rank(join, Sampler.generic(0), field) == 6

    def test_symbolic_agrees_with_sampled(self, field):
        join = JoinSpec.secant(builtin("veronese", n=2, d=2), 2)
        assert rank_symbolic(symbolic_join_jacobian(join)) == 5
        assert _stacked_rank(join, Sampler.generic(1), field) == 5

    def test_symbolic_laurent(self, field):
        spec = ToricSpec(((1, -1, 0, 2), (0, 1, 1, -1)))
        join = JoinSpec.secant(spec, 2)
        assert rank_symbolic(symbolic_join_jacobian(join)) == _stacked_rank(join, Sampler.generic(2), field)

    def test_lines_join(self, field):
        join = builtin("example13_lines")
        assert _stacked_rank(join, Sampler.generic(0), field) == 2

    @pytest.mark.parametrize(
        "name, params",
        [
            ("veronese", {"n": 2, "d": 2}),
            ("rational_normal_curve", {"deg": 4}),
            ("two_by_two_map", {}),
            ("segre", {"m": 2, "n": 3}),
            ("cayley_menger", {"d": 1, "n": 4}),
        ],
    )
    def test_stacked_rank_grows_with_s_up_to_the_bound(self, field, name, params):
        spec = builtin(name, **params)
        dim = _stacked_rank(JoinSpec.of(spec), Sampler.generic(3), field)
        previous = 0
        for s in range(1, 5):
            rank = _stacked_rank(JoinSpec.secant(spec, s), Sampler.generic(3), field)
            assert previous <= rank <= min(spec.n_coords, s * dim)
            previous = rank


class TestSampler:
    def test_generic_is_reproducible(self, field):
        join = JoinSpec.secant(builtin("veronese"), 2)
        first = sample_points(Sampler.generic(9), join, 1, field)
        assert first == sample_points(Sampler.generic(9), join, 1, field)
        assert first != sample_points(Sampler.generic(9), join, 2, field)
        assert first[0] != first[1]

    def test_generic_points_are_nonzero(self, small_field):
        join = JoinSpec.secant(builtin("veronese"), 3)
        for trial in range(5):
            for point in sample_points(Sampler.generic(0), join, trial, small_field):
                assert all(0 < v < 101 for v in point)

    def test_subgroup_point(self, field):
        join = JoinSpec.secant(builtin("p1xp1_23"), 2)
        points = sample_points(Sampler.subgroup([(2, 1), (0, 0)]), join, 0, field)
        assert points == [(4, 2, 1), (1, 1, 1)]
        assert Sampler.subgroup([(2, 1)]).is_deterministic

    def test_subgroup_direction_length(self, field):
        join = JoinSpec.of(builtin("p1xp1_23"))
        with pytest.raises(SpecError):
            sample_points(Sampler.subgroup([(2, 1, 0)]), join, 0, field)

    def test_subgroup_count(self, field):
        join = JoinSpec.secant(builtin("p1xp1_23"), 2)
        with pytest.raises(SpecError):
            sample_points(Sampler.subgroup([(2, 1)]), join, 0, field)

    def test_explicit_points(self, small_field):
        join = JoinSpec.of(builtin("two_by_two_map"))
        assert sample_points(Sampler.explicit([(1, 0, 1, 0)]), join, 7, small_field) == [(1, 0, 1, 0)]
        with pytest.raises(SpecError):
            sample_points(Sampler.explicit([(1, 0)]), join, 0, small_field)

    def test_negative_seed(self):
        with pytest.raises(SpecError):
            Sampler.generic(-1)


class TestLinearChange:
    def test_random_matrix_is_seeded_and_invertible(self):
        a = random_invertible_matrix(5, seed=3, height=2)
        assert a == random_invertible_matrix(5, seed=3, height=2)
        assert all(abs(v) <= 2 for row in a for v in row)

    def test_identity_change(self):
        spec = builtin("rational_normal_curve", deg=3)
        identity = [[int(i == j) for j in range(4)] for i in range(4)]
        assert compose_linear(spec, identity).components == spec.to_polymap().components

    def test_singular_change(self):
        spec = builtin("rational_normal_curve", deg=1)
        with pytest.raises(SpecError):
            compose_linear(spec, [[1, 1], [2, 2]])

    def test_change_keeps_dimension(self, field):
        spec = LinearChangeSpec.from_seed(builtin("rational_normal_curve", deg=4), seed=5)
        assert spec.labels == ("z1", "z2", "z3", "z4", "z5")
        assert _stacked_rank(JoinSpec.secant(spec, 2), Sampler.generic(0), field) == 4


class TestRegistry:
    @pytest.mark.parametrize(
        "name, params, n_coords, n_params",
        [
            ("veronese", {}, 10, 3),
            ("cayley_menger", {}, 10, 5),
            ("cayley_menger", {"d": 2, "n": 4}, 6, 8),
            ("sym_rank_one", {}, 36, 8),
            ("segre", {}, 16, 8),
            ("threefold_p", {}, 8, 4),
            ("table1_x1", {}, 10, 4),
            ("table1_x2_minors", {}, 10, 4),
            ("coloop_extension", {}, 6, 3),
            ("p1xp2_12", {}, 12, 4),
        ],
    )
    def test_shapes(self, name, params, n_coords, n_params):
        spec = builtin(name, **params)
        assert spec.n_coords == n_coords
        assert spec.n_params == n_params

    def test_threefold_columns(self):
        spec = builtin("Threefold-P")
        assert spec.columns[1] == (1, 0, 2, 1)
        assert len(spec.matrix) == 4

    def test_table1_labels(self):
        spec = builtin("table1_x1")
        assert spec.labels[0] == "z12"
        assert spec.labels[-1] == "z45"

    def test_cubic_veronese_order(self):
        # 1, s, s^2, s^3, t, st, s^2t, t^2, st^2, t^3
        assert builtin("veronese").columns[5] == (1, 1, 1)

    def test_string_params_are_coerced(self):
        assert builtin("veronese", d="2").n_coords == 6

    def test_unknown_name(self):
        with pytest.raises(SpecError):
            builtin("no_such_variety")

    def test_unknown_param(self):
        with pytest.raises(SpecError):
            builtin("veronese", degree=3)

    def test_listing_is_sorted(self):
        names = [entry.name for entry in list_builtins()]
        assert names == sorted(names)
        assert "veronese" in names


class TestSchema:
    def test_toric_document(self):
        spec = load_spec({"type": "toric", "exponents": [[0, 1, 2]]})
        assert isinstance(spec, ToricSpec)
        assert spec.homogenize

    def test_polymap_document_from_json(self):
        text = json.dumps({"type": "polymap", "vars": ["s", "t"], "components": ["s^2", "s*t", "t^2"]})
        spec = load_spec(text)
        assert isinstance(spec, PolyMapSpec)
        assert spec.n_coords == 3

    def test_secant_document(self):
        spec = load_spec({"type": "secant", "s": 2, "inner": {"type": "builtin", "name": "veronese"}})
        assert isinstance(spec, JoinSpec)
        assert spec.s == 2

    def test_secant_of_join_repeats_summands(self):
        spec = load_spec({"type": "secant", "s": 2, "inner": {"type": "builtin", "name": "example13_lines"}})
        assert spec.s == 4

    def test_linchange_with_matrix(self):
        spec = load_spec({
            "type": "linchange",
            "inner": {"type": "toric", "exponents": [[0, 1]]},
            "matrix": [[1, "1/2"], [0, 1]],
        })
        assert isinstance(spec, LinearChangeSpec)

    def test_linchange_needs_one_source(self):
        with pytest.raises(SpecError):
            load_spec({
                "type": "linchange",
                "inner": {"type": "toric", "exponents": [[0, 1]]},
                "seed": 1,
                "matrix": [[1, 0], [0, 1]],
            })

    def test_unknown_type(self):
        with pytest.raises(SpecError):
            load_spec({"type": "sphere"})

    def test_bad_polynomial(self):
        with pytest.raises(SpecError):
            load_spec({"type": "polymap", "vars": ["s"], "components": ["s +"]})

    def test_file_roundtrip(self, tmp_path):
        path = tmp_path / "spec.json"
        path.write_text(json.dumps({"type": "builtin", "name": "segre", "params": {"m": 2, "n": 2}}))
        assert load_spec_file(path).n_coords == 4

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpecError):
            load_spec_file(tmp_path / "absent.json")
