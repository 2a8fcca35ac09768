"""Unit tests for identity cases, reports and the suite runner."""

import json
import math

import pandas as pd
import pytest

from hurwitzlommel.config import load_tolerance_profile
from hurwitzlommel.errors import ConfigurationError
from hurwitzlommel.verify import (
    IdentityCase,
    IdentityId,
    Status,
    SuiteResult,
    SuiteRunner,
    VerificationReport,
    case_from_record,
    check_functional_equation,
    check_hermite_vs_em,
    check_hurwitz_formula,
    check_lemma21,
    check_masirevic,
    check_mellin_triple,
    check_modular_corollary,
    check_theorem31_phi_equality,
    check_theorem31_xi_integral,
    default_cases,
    dumps_records,
    evaluate_case,
    load_cases,
    parse_complex,
    run_suite,
    suite_frame,
)
from hurwitzlommel.verify.checks import STRETCH_IDENTITIES


def _case(identity, tol_abs=1e-12, tol_rel=1e-9, **params):
    return IdentityCase.create(identity, params, tol_abs=tol_abs, tol_rel=tol_rel)


class TestParseComplex:
    """Tests for the command-line and suite-file number syntax."""

    @pytest.mark.parametrize("text, expected", [
        ("-2.5", -2.5),
        ("1.3+0.7i", 1.3 + 0.7j),
        ("0.5i", 0.5j),
        ("−1.5", -1.5),
        ("2-1j", 2 - 1j),
        ("1e-3", 1e-3),
    ])
    def test_valid(self, text, expected):
        assert parse_complex(text) == expected

    @pytest.mark.parametrize("text", ["", "abc", "1.5x", "inf", "nan", "1+"])
    def test_invalid(self, text):
        with pytest.raises(ValueError, match="number"):
            parse_complex(text)


class TestIdentityCase:
    """Tests for case construction and serialization."""

    def test_tolerances_from_profile(self):
        case = IdentityCase.create("lemma21", {"s": 1.5, "a": 1.0, "k": 1})

        assert case.identity_id is IdentityId.LEMMA21
        assert case.tol_abs == pytest.approx(1e-12)
        assert case.tol_rel == pytest.approx(1e-8)

    def test_explicit_tolerances_win(self, tolerance_file):
        strict = load_tolerance_profile("strict", path=tolerance_file)
        case = IdentityCase.create("lemma21", {"s": 1.5}, tol_rel=1e-3, profile=strict)

        assert case.tol_rel == 1e-3
        assert case.tol_abs == pytest.approx(1e-14)

    def test_param_normalization(self):
        case = IdentityCase.create("hermite_vs_em", {"s": "1.5+0.5i", "a": {"re": 2.0, "im": 0.0}, "k": 3})

        assert case.params == {"s": 1.5 + 0.5j, "a": 2.0, "k": 3}

    def test_record_round_trip(self):
        case = IdentityCase.create("mellin_triple", {"s": -0.5 + 1j, "z": 0.25}, label="point")
        record = json.loads(dumps_records([case.to_record()]))[0]

        assert record["params"]["s"] == {"re": -0.5, "im": 1.0}
        assert case_from_record(record) == case

    @pytest.mark.parametrize("params, message", [
        ({"s": True}, "boolean"),
        ({"s": float("nan")}, "finite"),
        ({"s": [1, 2]}, "numeric"),
        ({"s": {"re": 1.0}}, "re, im"),
    ])
    def test_invalid_params(self, params, message):
        with pytest.raises(ConfigurationError, match=message):
            IdentityCase.create("functional_equation", params)

    def test_unknown_identity(self):
        with pytest.raises(ConfigurationError, match="unknown identity id 'nope'"):
            IdentityCase.create("nope", {"s": 1.0})

    def test_non_positive_tolerance(self):
        with pytest.raises(ConfigurationError):
            IdentityCase.create("functional_equation", {"s": -0.5}, tol_abs=0.0)

    def test_unknown_record_field(self):
        with pytest.raises(ConfigurationError, match="unknown suite entry fields: extra"):
            case_from_record({"identity_id": "functional_equation", "params": {"s": -0.5}, "extra": 1})

    def test_case_is_frozen(self):
        case = _case("functional_equation", s=-0.5)
        with pytest.raises(ValueError):
            case.tol_abs = 1.0  # type: ignore[misc]


class TestLoadCases:
    """Tests for suite files."""

    def test_load(self, tmp_path):
        path = tmp_path / "suite.json"
        path.write_text(json.dumps([
            {"identity_id": "functional_equation", "params": {"s": -0.5}},
            {"identity_id": "hurwitz_formula", "params": {"s": "-0.5", "a": 0.25}, "tol_rel": 1e-6, "label": "x"},
        ]))
        cases = load_cases(path)

        assert [c.identity_id for c in cases] == [IdentityId.FUNCTIONAL_EQUATION, IdentityId.HURWITZ_FORMULA]
        assert cases[1].tol_rel == 1e-6
        assert cases[1].label == "x"

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError, match="Suite file not found"):
            load_cases(tmp_path / "nope.json")

    @pytest.mark.parametrize("content, message", [
        ("{not json", "not valid JSON"),
        ('{"identity_id": "lemma21"}', "JSON array"),
        ('[{"params": {}}]', "without identity_id"),
        ('[3]', "must be objects"),
    ])
    def test_malformed(self, tmp_path, content, message):
        path = tmp_path / "suite.json"
        path.write_text(content)

        with pytest.raises(ConfigurationError, match=message):
            load_cases(path)

    def test_report_reloads_as_suite(self, tmp_path):
        cases = [_case("functional_equation", s=-0.5), _case("hurwitz_formula", s=-0.5, a=1.5)]
        path = tmp_path / "report.json"
        path.write_text(run_suite(cases).to_json())

        assert load_cases(path) == cases


class TestVerificationReport:
    """Tests for the pass/fail decision and the report views."""

    def test_abs_or_rel_decides(self):
        case = _case("functional_equation", tol_abs=1e-12, tol_rel=1e-6, s=-0.5)

        assert VerificationReport.evaluated(case, 1.0, 1.0 + 1e-7).passed
        assert VerificationReport.evaluated(case, 1e-20, 2e-20).passed
        assert VerificationReport.evaluated(case, 1.0, 1.1).status is Status.FAILED

    def test_errors(self):
        case = _case("functional_equation", s=-0.5)
        report = VerificationReport.evaluated(case, 2.0, 2.0 + 1e-3j)

        assert report.abs_err == pytest.approx(1e-3)
        assert report.rel_err == pytest.approx(1e-3 / abs(2.0 + 1e-3j))

    def test_both_sides_zero(self):
        """The relative error stays finite when both sides vanish"""
        case = _case("masirevic_t22", m=1, mu=2.0, x=0.0)
        report = VerificationReport.evaluated(case, 0.0, 0.0)

        assert report.passed
        assert report.rel_err == 0.0

    def test_witnesses_widen_the_error(self):
        case = _case("mellin_triple", tol_abs=1e-15, tol_rel=1e-9, s=-0.3, z=0.5)
        report = VerificationReport.evaluated(case, 1.0, 1.0, witnesses=[1.0 + 1e-6])

        assert report.status is Status.FAILED
        assert report.abs_err == pytest.approx(1e-6)
        assert report.rhs == 1.0

    def test_non_finite_side_errors(self):
        case = _case("functional_equation", s=-0.5)

        assert VerificationReport.evaluated(case, math.inf, 1.0).status is Status.ERRORED

    def test_wall_time_not_compared(self):
        case = _case("functional_equation", s=-0.5)
        report = VerificationReport.evaluated(case, 1.0, 1.0)

        assert report.with_wall_time(3.0) == report
        assert report.with_wall_time(3.0).wall_time == 3.0

    def test_record(self):
        case = _case("functional_equation", s=-0.5)
        record = VerificationReport.evaluated(case, 1.0, 1.0, {"terms_used": 5}).to_record()

        assert record["status"] == "passed"
        assert record["lhs"] == {"re": 1.0, "im": 0.0}
        assert record["diagnostics"]["terms_used"] == 5
        assert "wall_time" in record["diagnostics"]
        assert "message" not in record

    @pytest.mark.parametrize("value", [1.0, 0.1, 1e20, 2.0 ** -1074, math.pi * 1e-300])
    def test_numbers_read_back_exactly(self, value):
        (record,) = json.loads(dumps_records([{"x": value, "z": complex(value, -value)}]))
        assert record["x"] == value
        assert record["z"] == {"re": value, "im": -value}

    def test_non_finite_numbers_are_null(self):
        text = dumps_records([{"x": math.nan, "y": [-math.inf, 1.5], "status": Status.FAILED}])
        assert json.loads(text) == [{"x": None, "y": [None, 1.5], "status": "failed"}]

    def test_empty_dump(self):
        assert json.loads(dumps_records([])) == []


class TestSuiteResult:
    """Tests for counts and exit codes."""

    @pytest.mark.parametrize("statuses, code", [
        ([], 0),
        ([Status.PASSED, Status.SKIPPED], 0),
        ([Status.PASSED, Status.FAILED], 1),
        ([Status.ERRORED], 1),
        ([Status.FAILED, Status.CONFIG_ERROR], 2),
    ])
    def test_exit_code(self, statuses, code):
        case = _case("functional_equation", s=-0.5)
        result = SuiteResult([VerificationReport.outcome(case, status, "") for status in statuses])

        assert result.exit_code == code

    def test_counts_cover_every_status(self):
        assert SuiteResult().counts() == {status.value: 0 for status in Status}

    def test_frame_columns(self):
        case = _case("functional_equation", s=-0.5)
        frame = SuiteResult([VerificationReport.evaluated(case, 1.0, 1.0)]).to_df()

        assert isinstance(frame, pd.DataFrame)
        assert list(frame.columns[:3]) == ["identity_id", "label", "params"]
        assert frame.loc[0, "status"] == "passed"


class TestOutcomes:
    """Tests for how evaluation failures become statuses."""

    def test_outside_validity_region_is_config_error(self):
        report = check_hurwitz_formula(-0.5, 1.5)

        assert report.status is Status.CONFIG_ERROR
        assert "a must lie in" in report.message
        assert report.lhs is None

    def test_missing_parameter_is_config_error(self):
        report = evaluate_case(_case("lemma21", s=1.5, a=1.0))

        assert report.status is Status.CONFIG_ERROR
        assert "needs parameter 'k'" in report.message

    @pytest.mark.parametrize("identity, params", [
        ("functional_equation", {"s": 2.0}),
        ("masi_closed_form", {"s": -2.0, "a": 1.0}),
        ("a1_closed_form", {"s": -0.5}),
        ("modular_corollary", {"s": 1.0, "alpha": 2.0}),
        ("theorem31_phi_equality", {"s": 2.5, "alpha": 1.0}),
        ("mellin_triple", {"s": 0.5, "z": 0.5}),
        ("mellin_triple", {"s": -0.5, "z": -1.0}),
        ("masirevic_t22", {"m": 0, "mu": 2.0, "x": 1.0}),
        ("lemma21", {"s": 1.5, "a": -1.0, "k": 1}),
        ("lemma21", {"s": 1.5, "a": 1.0, "k": 1.5}),
    ])
    def test_preconditions(self, identity, params):
        assert evaluate_case(_case(identity, **params)).status is Status.CONFIG_ERROR

    def test_domain_error_during_evaluation_is_config_error(self):
        """The Lommel-side sums reject nu other than +-1/2"""
        report = check_masirevic("t21", {"m": 0, "mu": 1.5, "nu": 0.3, "x": math.pi})

        assert report.status is Status.CONFIG_ERROR

    def test_unknown_theorem(self):
        with pytest.raises(ConfigurationError, match="theorem must be one of"):
            check_masirevic("t23", {})

    def test_wall_time_recorded(self):
        assert check_functional_equation(-0.5).wall_time >= 0.0


class TestIdentities:
    """Each identity holds at a representative point."""

    @pytest.mark.parametrize("s", [-0.5, -2.5, -4.5, 0.5 + 3j])
    def test_functional_equation(self, s):
        report = check_functional_equation(s)
        assert report.passed, report.message or report.rel_err

    @pytest.mark.parametrize("s, a, k", [(1.5, 1.0, 1), (-3.0, 0.25, 5), (2 + 1j, 2 ** 0.5, 2), (0.0, 1.0, 3)])
    def test_lemma21(self, s, a, k):
        report = check_lemma21(s, a, k)
        assert report.passed, report.message or report.rel_err
        assert report.diagnostics["route"] in {"series_small_z", "integral_large_z"}

    @pytest.mark.parametrize("s, a", [(-2.5, 0.3), (3.5 + 1j, 0.5), (1.01, 2.0)])
    def test_hermite_vs_em(self, s, a):
        report = check_hermite_vs_em(s, a)
        assert report.passed, report.message or report.rel_err
        assert report.diagnostics["em_shift"] >= 0

    def test_hurwitz_formula(self):
        report = check_hurwitz_formula(-0.5, 1 / 3)
        assert report.passed, report.message or report.rel_err

    def test_hurwitz_formula_trivial_zero(self):
        report = check_hurwitz_formula(-2.0, 1.0, tol_abs=1e-10)
        assert report.passed, report.message or report.abs_err

    def test_hurwitz_formula_complex_order(self):
        report = check_hurwitz_formula(-1.5 + 1j, 0.9)
        assert report.passed, report.message or report.rel_err

    def test_mellin_triple_with_second_contour(self):
        from hurwitzlommel.controls import ContourSpec

        report = check_mellin_triple(-0.5, 0.7, ContourSpec(c=0.7), c_alt=1.6, tol_rel=1e-9)
        assert report.passed, report.message or report.rel_err
        assert report.diagnostics["contour_abs_err"] < 1e-9

    @pytest.mark.slow
    def test_modular_corollary(self):
        report = check_modular_corollary(1.3, 2.0)
        assert report.passed, report.message or report.rel_err

    @pytest.mark.slow
    def test_phi_equality(self):
        report = check_theorem31_phi_equality(1.5, 1.0)
        assert report.passed, report.message or report.rel_err

    @pytest.mark.stretch
    def test_xi_integral(self):
        report = check_theorem31_xi_integral(1.5, 1.0)
        assert report.passed, report.message or report.rel_err
        assert report.diagnostics["max_imag_integrand"] < 1e-8


class TestSuiteRunner:
    """Tests for the runner and the default suite."""

    SMALL_SUITE = [
        ("functional_equation", {"s": -0.5}),
        ("functional_equation", {"s": -2.5}),
        ("hermite_vs_em", {"s": 0.5, "a": 1.0}),
        ("hurwitz_formula", {"s": -0.5, "a": 1.5}),
        ("hurwitz_formula", {"s": -2.3, "a": 0.25}),
        ("lemma21", {"s": 1.5, "a": 1.0, "k": 1}),
        ("mellin_triple", {"s": -1.2, "z": 0.8}),
    ]

    def _cases(self):
        return [IdentityCase.create(identity, params) for identity, params in self.SMALL_SUITE]

    def test_reports_in_case_order(self):
        cases = self._cases()
        result = run_suite(cases)

        assert [report.case for report in result] == cases
        assert result.reports[3].status is Status.CONFIG_ERROR
        assert result.exit_code == 2

    def test_parallelism_does_not_change_results(self):
        cases = self._cases()
        serial = run_suite(cases, parallelism=1)
        threaded = run_suite(cases, parallelism=4)

        def summary(result):
            return [(r.status, r.lhs, r.rhs, r.abs_err) for r in result]

        assert summary(threaded) == summary(serial)

    def test_empty_suite(self):
        result = run_suite([])

        assert len(result) == 0
        assert result.exit_code == 0
        assert json.loads(result.to_json()) == []

    @pytest.mark.parametrize("parallelism", [0, -2, True, 1.5])
    def test_invalid_parallelism(self, parallelism):
        with pytest.raises(ConfigurationError, match="parallelism"):
            SuiteRunner(parallelism=parallelism)

    def test_suite_frame(self):
        frame = suite_frame(self._cases()[:2])

        assert len(frame) == 2
        assert set(frame["status"]) == {"passed"}

    def test_default_suite_contents(self):
        cases = default_cases()
        identities = {case.identity_id for case in cases}

        assert identities == set(IdentityId) - STRETCH_IDENTITIES
        assert sum(case.identity_id is IdentityId.LEMMA21 for case in cases) == 74
        assert sum(case.identity_id is IdentityId.HERMITE_VS_EM for case in cases) == 20
        assert sum(case.identity_id is IdentityId.MELLIN_TRIPLE for case in cases) == 14

    def test_default_suite_with_stretch(self):
        cases = default_cases(include_stretch=True)

        assert sum(case.identity_id is IdentityId.THEOREM31_XI_INTEGRAL for case in cases) == 2

    def test_default_suite_uses_profile(self, tolerance_file):
        strict = load_tolerance_profile("strict", path=tolerance_file)
        lemma = next(case for case in default_cases(profile=strict) if case.identity_id is IdentityId.LEMMA21)

        assert lemma.tol_rel == pytest.approx(1e-10)

    @pytest.mark.slow
    def test_default_suite_passes(self):
        result = run_suite(default_cases(), parallelism=4)
        bad = [(r.case.identity_id.value, r.case.params, r.status.value, r.message) for r in result if r.status not in (Status.PASSED, Status.SKIPPED)]

        assert bad == []
        assert result.exit_code == 0

    @pytest.mark.slow
    def test_more_terms_never_fail_a_passing_case(self):
        truncated = (IdentityId.BEFMAS_EXPANSION, IdentityId.MASI_CLOSED_FORM, IdentityId.MODULAR_COROLLARY)
        cases = [case for case in default_cases() if case.identity_id in truncated]
        assert {case.identity_id for case in cases} == set(truncated)

        flipped = []
        for case in cases:
            doubled = IdentityCase.create(
                case.identity_id,
                {**case.params, "K": 2 * case.params["K"]},
                tol_abs=case.tol_abs,
                tol_rel=case.tol_rel,
            )
            before, after = evaluate_case(case), evaluate_case(doubled)
            if before.status is Status.PASSED and after.status is not Status.PASSED:
                flipped.append((case.identity_id.value, case.params, after.status.value, after.rel_err))

        assert flipped == []
