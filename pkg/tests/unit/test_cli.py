"""Unit tests for the command-line interface."""

import io
import json
import math

import pandas as pd
import pytest

from hurwitzlommel import __version__
from hurwitzlommel.cli import UsageError, main, parse_range
from hurwitzlommel.zeta import hurwitz_zeta_em


def _json(capsys):
    return json.loads(capsys.readouterr().out)


class TestEval:
    """Tests for `hurwitzlommel eval`."""

    def test_zeta_json(self, capsys):
        assert main(["eval", "zeta", "--s", "2", "--format", "json"]) == 0

        (record,) = _json(capsys)
        assert record["function"] == "zeta"
        assert record["value"]["re"] == pytest.approx(math.pi ** 2 / 6, rel=1e-14)
        assert record["params"]["s"] == {"re": 2.0, "im": 0.0}

    def test_complex_argument(self, capsys):
        assert main(["eval", "hurwitz_em", "--s=-2+1i", "--a", "0.5", "--format", "json"]) == 0

        value = _json(capsys)[0]["value"]
        assert complex(value["re"], value["im"]) == pytest.approx(hurwitz_zeta_em(-2 + 1j, 0.5), rel=1e-15)

    def test_text_output(self, capsys):
        assert main(["eval", "sigma", "--s", "1", "--n", "6"]) == 0

        assert capsys.readouterr().out.strip() in {"12.0", "12.0+0.0i"}

    def test_csv_output(self, capsys):
        assert main(["eval", "xi", "--s", "2", "--format", "csv"]) == 0

        frame = pd.read_csv(io.StringIO(capsys.readouterr().out))
        assert list(frame.columns) == ["s", "re", "im"]
        assert frame.loc[0, "re"] == pytest.approx(math.pi / 6, rel=1e-13)

    def test_line_integral_diagnostics(self, capsys):
        assert main(["eval", "i_s", "--s=-0.3", "--z", "0.5", "--format", "json"]) == 0

        diagnostics = _json(capsys)[0]["diagnostics"]
        assert {"c", "t_max", "nodes_used", "tail_bound"} <= set(diagnostics)

    def test_out_file(self, tmp_path):
        out = tmp_path / "value.json"
        assert main(["eval", "zeta", "--s", "4", "--format", "json", "--out", str(out)]) == 0

        assert json.loads(out.read_text())[0]["value"]["re"] == pytest.approx(math.pi ** 4 / 90, rel=1e-13)

    def test_list(self, capsys):
        assert main(["eval", "--list"]) == 0

        out = capsys.readouterr().out
        assert "lommel_S_special" in out
        assert "i_s" in out

    @pytest.mark.parametrize("argv, message", [
        (["eval", "zeta"], "missing --s"),
        (["eval", "nope", "--s", "1"], "unknown function"),
        (["eval"], "function name is required"),
        (["eval", "zeta", "--s", "1"], "pole"),
        (["eval", "hurwitz_fourier", "--s=-0.5", "--a", "1.5"], "a must lie in"),
        (["eval", "sigma", "--s", "1", "--n", "2.5"], "must be an integer"),
        (["eval", "phi", "--s", "1.5", "--x", "1+1i"], "must be real"),
    ])
    def test_usage_errors(self, capsys, argv, message):
        assert main(argv) == 2

        assert message in capsys.readouterr().err

    def test_malformed_number(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["eval", "zeta", "--s", "two"])

        assert exc_info.value.code == 2


class TestVerify:
    """Tests for `hurwitzlommel verify`."""

    def test_passing_case(self, capsys):
        assert main(["verify", "functional_equation", "--s=-0.5"]) == 0

        assert "functional_equation(s=-0.5): passed" in capsys.readouterr().out

    def test_failing_case(self, capsys):
        """One term of the Lommel expansion is far from zeta(s, a)"""
        argv = ["verify", "befmas_expansion", "--s=-1.5", "--a", "0.5", "--K", "1", "--format", "json"]
        assert main(argv) == 1

        (record,) = _json(capsys)
        assert record["status"] == "failed"
        assert record["rel_err"] > 1e-5

    def test_config_error(self, capsys):
        assert main(["verify", "hurwitz_formula", "--s=-0.5", "--a", "1.5", "--format", "json"]) == 2

        (record,) = _json(capsys)
        assert record["status"] == "config-error"
        assert record["lhs"] is None

    def test_integer_params(self, capsys):
        assert main(["verify", "lemma21", "--s", "1.5", "--a", "1", "--k", "2", "--format", "json"]) == 0

        assert _json(capsys)[0]["params"]["k"] == 2

    def test_profile(self, capsys, tolerance_file):
        argv = ["verify", "lemma21", "--s", "1.5", "--a", "1", "--k", "1",
                "--profile", "loose", "--config", str(tolerance_file), "--format", "json"]
        assert main(argv) == 0

        assert _json(capsys)[0]["tol_rel"] == pytest.approx(1e-7)

    def test_unknown_profile(self, capsys, tolerance_file):
        assert main(["verify", "lemma21", "--profile", "nope", "--config", str(tolerance_file)]) == 2

        assert "Profile 'nope' not found" in capsys.readouterr().err

    def test_unknown_identity(self, capsys):
        assert main(["verify", "nope", "--s", "1"]) == 2

        assert "unknown identity id" in capsys.readouterr().err

    def test_list(self, capsys):
        assert main(["verify", "--list"]) == 0

        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 13
        assert any(line.startswith("theorem31_xi_integral") and line.endswith("stretch") for line in lines)


class TestSuite:
    """Tests for `hurwitzlommel suite`."""

    @pytest.fixture
    def suite_file(self, tmp_path):
        path = tmp_path / "suite.json"
        path.write_text(json.dumps([
            {"identity_id": "functional_equation", "params": {"s": -0.5}},
            {"identity_id": "functional_equation", "params": {"s": "-2.5"}},
            {"identity_id": "hurwitz_formula", "params": {"s": -0.5, "a": 0.25}},
        ]))
        return path

    def test_file_suite(self, capsys, suite_file, tmp_path):
        out = tmp_path / "report.json"
        assert main(["suite", str(suite_file), "--jobs", "2", "--format", "json", "--out", str(out)]) == 0

        records = json.loads(out.read_text())
        assert [record["status"] for record in records] == ["passed"] * 3

    def test_csv_report(self, capsys, suite_file):
        assert main(["suite", str(suite_file), "--format", "csv"]) == 0

        frame = pd.read_csv(io.StringIO(capsys.readouterr().out))
        assert len(frame) == 3
        assert set(frame["status"]) == {"passed"}

    def test_config_error_exit_code(self, tmp_path):
        path = tmp_path / "suite.json"
        path.write_text(json.dumps([
            {"identity_id": "functional_equation", "params": {"s": -0.5}},
            {"identity_id": "mellin_triple", "params": {"s": 0.5, "z": 0.5}},
        ]))

        assert main(["suite", str(path)]) == 2

    def test_empty_suite(self, tmp_path, capsys):
        path = tmp_path / "suite.json"
        path.write_text("[]")

        assert main(["suite", str(path)]) == 0
        assert "0 cases" in capsys.readouterr().out

    def test_missing_file(self, tmp_path, capsys):
        assert main(["suite", str(tmp_path / "nope.json")]) == 2

        assert "Suite file not found" in capsys.readouterr().err

    def test_invalid_jobs(self, suite_file, capsys):
        assert main(["suite", str(suite_file), "--jobs", "0"]) == 2


class TestTable:
    """Tests for `hurwitzlommel table`."""

    def test_row_count(self, capsys):
        assert main(["table", "zeta", "--s-range", "2:3:5"]) == 0

        frame = pd.read_csv(io.StringIO(capsys.readouterr().out))
        assert len(frame) == 5
        assert list(frame.columns) == ["s", "re", "im", "diagnostics"]
        assert frame["re"].iloc[0] == pytest.approx(math.pi ** 2 / 6, rel=1e-14)

    def test_fixed_parameters(self, capsys):
        assert main(["table", "lommel_S_special", "--s=-2", "--z-range", "1:4:4", "--format", "json"]) == 0

        records = _json(capsys)
        assert [record["re"] for record in records] == pytest.approx([1.0, math.sqrt(2), math.sqrt(3), 2.0], rel=1e-10)

    def test_failed_points_are_reported(self, capsys):
        assert main(["table", "zeta", "--s-range", "0.5:1.5:3"]) == 1

        frame = pd.read_csv(io.StringIO(capsys.readouterr().out))
        assert len(frame) == 3
        assert "PoleError" in frame["diagnostics"].iloc[1]

    @pytest.mark.parametrize("argv", [
        ["table", "zeta", "--s-range", "3:2:5"],
        ["table", "zeta", "--s-range", "2:3"],
        ["table", "zeta", "--s-range", "2:3:0"],
        ["table", "zeta", "--s-range", "2:3:5", "--x-range", "1:2:3"],
        ["table", "zeta"],
        ["table", "zeta", "--x-range", "1:2:3"],
    ])
    def test_usage_errors(self, capsys, argv):
        assert main(argv) == 2


class TestParseRange:
    """Tests for parse_range."""

    def test_points(self):
        assert list(parse_range("0:1:5")) == [0.0, 0.25, 0.5, 0.75, 1.0]

    def test_reversed(self):
        with pytest.raises(UsageError, match="below its stop"):
            parse_range("1:0:5")


def test_version(capsys):
    with pytest.raises(SystemExit) as exc_info:
        main(["--version"])

    assert exc_info.value.code == 0
    assert __version__ in capsys.readouterr().out
