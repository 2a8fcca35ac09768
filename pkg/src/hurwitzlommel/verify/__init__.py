"""Identity verification harness"""

from hurwitzlommel.verify.cases import (
    IdentityId,
    IdentityCase,
    parse_complex,
    case_from_record,
    load_cases,
)

from hurwitzlommel.verify.report import (
    Status,
    VerificationReport,
    SuiteResult,
    dumps_records,
)

from hurwitzlommel.verify.checks import (
    CheckOptions,
    evaluate_case,
    check_lemma21,
    check_hermite_vs_em,
    check_hurwitz_formula,
    check_functional_equation,
    check_befmas_expansion,
    check_masi_closed_form,
    check_a1_closed_form,
    check_masirevic,
    check_modular_corollary,
    check_theorem31_phi_equality,
    check_theorem31_xi_integral,
    check_mellin_triple,
)

from hurwitzlommel.verify.runner import SuiteRunner, run_case, run_suite, suite_frame

from hurwitzlommel.verify.suite import default_cases

__all__ = [
    # Cases
    "IdentityId",
    "IdentityCase",
    "parse_complex",
    "case_from_record",
    "load_cases",
    # Reports
    "Status",
    "VerificationReport",
    "SuiteResult",
    "dumps_records",
    # Checks
    "CheckOptions",
    "evaluate_case",
    "check_lemma21",
    "check_hermite_vs_em",
    "check_hurwitz_formula",
    "check_functional_equation",
    "check_befmas_expansion",
    "check_masi_closed_form",
    "check_a1_closed_form",
    "check_masirevic",
    "check_modular_corollary",
    "check_theorem31_phi_equality",
    "check_theorem31_xi_integral",
    "check_mellin_triple",
    # Runner
    "SuiteRunner",
    "run_case",
    "run_suite",
    "suite_frame",
    "default_cases",
]
