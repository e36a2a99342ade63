import json

import pytest
from typer.testing import CliRunner

from cli.main import EXIT_CAP, EXIT_NOT_UNION, EXIT_USAGE, app
from cli.options import OutputFormat, RunConfig, parse_params, parse_subset, resolve_output
from config.settings import get_settings
from core.exceptions import SpecError

runner = CliRunner()


def _json(result):
    assert result.exit_code in (0, EXIT_NOT_UNION), result.output
    return json.loads(result.stdout)


class TestOptions:
    def test_parse_params(self):
        assert parse_params(["n=2", " d = 3 "]) == {"n": "2", "d": "3"}
        assert parse_params(None) == {}

    def test_parse_params_rejects_bare_words(self):
        with pytest.raises(SpecError):
            parse_params(["n"])

    def test_parse_subset(self):
        assert parse_subset(["z0,z1", "z2", " z3 , "]) == ["z0", "z1", "z2", "z3"]
        assert parse_subset(None) is None

    def test_one_input_source(self):
        with pytest.raises(ValueError):
            RunConfig()
        with pytest.raises(ValueError):
            RunConfig(builtin="veronese", input_path="spec.json")

    def test_output_falls_back_on_settings(self, monkeypatch):
        monkeypatch.setenv("TERRACINI_OUTPUT_FORMAT", "json")
        get_settings.cache_clear()
        try:
            assert resolve_output(None) == OutputFormat.JSON
            assert resolve_output(OutputFormat.TEXT) == OutputFormat.TEXT
            assert RunConfig(builtin="veronese").output == OutputFormat.JSON
        finally:
            get_settings.cache_clear()

    def test_unknown_output_setting(self, monkeypatch):
        monkeypatch.setenv("TERRACINI_OUTPUT_FORMAT", "yaml")
        get_settings.cache_clear()
        try:
            with pytest.raises(SpecError):
                resolve_output(None)
        finally:
            get_settings.cache_clear()

    def test_secant_of_join_is_rejected(self):
        with pytest.raises(SpecError):
            RunConfig(builtin="example13_lines", s=2).load_join()


class TestCommands:
    def test_version(self):
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert get_settings().app_version in result.stdout

    def test_builtins(self):
        result = runner.invoke(app, ["builtins"])
        assert result.exit_code == 0
        assert "veronese" in result.stdout

    def test_matroid_json(self):
        data = _json(runner.invoke(app, ["matroid", "-b", "table1_x1", "-o", "json"]))
        assert data["rank"] == 4
        assert data["base_count"] == 141
        assert data["bases"] is None

    def test_matroid_lists_bases(self):
        data = _json(runner.invoke(app, ["matroid", "-b", "veronese", "-p", "d=2", "--bases", "-o", "json"]))
        assert data["ground"] == ["z0", "z1", "z2", "z3", "z4", "z5"]
        assert len(data["bases"]) == data["base_count"]

    def test_matroid_document_with_bases(self):
        result = runner.invoke(app, ["matroid", "-b", "two_by_two_map", "--document", "--bases"])
        assert result.exit_code == 0, result.output
        document = json.loads(result.stdout)
        assert document["ground"] == ["z1", "z2", "z3", "z4"]
        assert document["rank"] == 3
        assert document["bases"] == [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]

    def test_matroid_document_without_bases(self):
        result = runner.invoke(app, ["matroid", "-b", "two_by_two_map", "--document"])
        assert result.exit_code == 0, result.output
        document = json.loads(result.stdout)
        assert document["bases"] is None
        assert document["provenance"] == "jacobian"
        assert document["parameters"]["seed"] == 0

    def test_matroid_text(self):
        result = runner.invoke(app, ["matroid", "-b", "two_by_two_map"])
        assert result.exit_code == 0
        assert "Rank" in result.stdout

    def test_secant(self):
        data = _json(runner.invoke(app, ["secant", "-b", "veronese", "-p", "d=2", "-o", "json"]))
        assert data["s"] == 2
        assert data["defect"]["defect"] == 1

    def test_join_from_file(self, tmp_path):
        path = tmp_path / "lines.json"
        path.write_text(json.dumps({
            "type": "join",
            "summands": [
                {"type": "polymap", "vars": ["t"], "components": ["t", "t", "t"]},
                {"type": "polymap", "vars": ["t"], "components": ["t", "-t", "2*t"]},
            ],
        }))
        data = _json(runner.invoke(app, ["join", str(path), "-o", "json"]))
        assert data["matroid"]["rank"] == 2
        assert data["defect"]["defective"] is False

    def test_union_check_not_a_union(self):
        result = runner.invoke(app, ["union-check", "-b", "veronese", "-s", "2", "-o", "json"])
        assert result.exit_code == EXIT_NOT_UNION
        data = json.loads(result.stdout)
        assert len(data["missing_bases"]) == 3

    def test_union_check_union(self):
        result = runner.invoke(app, ["union-check", "-b", "coloop_extension", "-s", "2"])
        assert result.exit_code == 0, result.output

    def test_union_check_cap(self):
        result = runner.invoke(app, ["union-check", "-b", "veronese", "-s", "2", "--cap", "5"])
        assert result.exit_code == EXIT_CAP

    def test_json_is_deterministic(self):
        args = ["union-check", "-b", "veronese", "-s", "2", "--seed", "3", "-o", "json"]
        assert runner.invoke(app, args).stdout == runner.invoke(app, args).stdout

    def test_rank(self):
        args = ["rank", "-b", "veronese", "-s", "2", "-E", "z0,z1,z2", "-E", "z4,z5,z7", "-o", "json"]
        data = _json(runner.invoke(app, args))
        assert data["rank"] == 5
        assert data["defect"]["defect"] == 1

    def test_rank_of_everything(self):
        data = _json(runner.invoke(app, ["rank", "-b", "veronese", "-s", "2", "-E", "all", "-o", "json"]))
        assert len(data["subset"]) == 10
        assert data["rank"] == 6
        assert data["defect"]["defect"] == 0

    def test_rank_unknown_label(self):
        result = runner.invoke(app, ["rank", "-b", "veronese", "-E", "z99"])
        assert result.exit_code == EXIT_USAGE

    def test_defect(self):
        data = _json(runner.invoke(app, ["defect", "-b", "sym_rank_one", "-s", "2", "-o", "json"]))
        assert (data["actual_dim"], data["expected_dim"]) == (15, 16)

    def test_partition_subset(self):
        args = ["partition", "-b", "veronese", "-s", "2", "-E", "z0,z1,z2,z3,z4,z9", "-o", "json"]
        data = _json(runner.invoke(app, args))
        assert data["independent"] is True
        assert len(data["parts"]) == 2

    def test_partition_every_basis(self):
        data = _json(runner.invoke(app, ["partition", "-b", "example13_lines", "-o", "json"]))
        assert data["join_base_count"] == 3
        assert len(data["certificates"]) == 3

    def test_scan(self):
        data = _json(runner.invoke(app, ["scan", "--simplex", "2,3", "-o", "json"]))
        assert data["match_count"] == 3
        assert all(m["missing_basis"] for m in data["matches"])

    def test_scan_grid_without_verdicts(self):
        data = _json(runner.invoke(app, ["scan", "--grid", "3,2", "--no-verdicts", "-o", "json"]))
        assert [m["offset"] for m in data["matches"]] == [[0, 0], [1, 0]]

    @pytest.mark.parametrize(
        "args",
        [
            ["scan"],
            ["scan", "--simplex", "2,3", "--grid", "1,1"],
            ["scan", "--simplex", "2"],
        ],
    )
    def test_scan_usage_errors(self, args):
        assert runner.invoke(app, args).exit_code == EXIT_USAGE

    def test_examples(self):
        result = runner.invoke(app, ["examples", "lines", "-o", "json"])
        assert result.exit_code == 0, result.output
        (report,) = json.loads(result.stdout)
        assert report["name"] == "lines"
        assert report["passed"] is True

    def test_examples_text(self):
        result = runner.invoke(app, ["examples", "two-by-two"])
        assert result.exit_code == 0, result.output
        assert "match" in result.stdout


class TestUsageErrors:
    @pytest.mark.parametrize(
        "args",
        [
            ["matroid", "-b", "no_such_variety"],
            ["matroid"],
            ["matroid", "-b", "veronese", "-p", "degree=3"],
            ["matroid", "-b", "veronese", "--trials", "0"],
            ["secant", "-b", "example13_lines", "-s", "3"],
            ["examples", "no-such-example"],
        ],
    )
    def test_exit_code(self, args):
        result = runner.invoke(app, args)
        assert result.exit_code == EXIT_USAGE, result.output

    def test_composite_prime(self):
        result = runner.invoke(app, ["matroid", "-b", "two_by_two_map", "--prime", "15"])
        assert result.exit_code == EXIT_USAGE, result.output

    def test_prime_dividing_a_coefficient(self, tmp_path):
        path = tmp_path / "third.json"
        path.write_text(json.dumps({"type": "polymap", "vars": ["x"], "components": ["x", "x^2/3"]}))
        result = runner.invoke(app, ["matroid", str(path), "--prime", "3"])
        assert result.exit_code == EXIT_USAGE, result.output

    def test_param_with_file(self, tmp_path):
        path = tmp_path / "curve.json"
        path.write_text(json.dumps({"type": "toric", "exponents": [[0, 1, 2]]}))
        result = runner.invoke(app, ["matroid", str(path), "-p", "n=2"])
        assert result.exit_code == EXIT_USAGE

    def test_bad_spec_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        result = runner.invoke(app, ["matroid", str(path)])
        assert result.exit_code == EXIT_USAGE
