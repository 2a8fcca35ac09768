"""One check per identity

Each identity has a preparer that reads and validates the case parameters and
returns a thunk doing the numerical work. Errors raised while preparing (or any
DomainError) mark the case config-error; errors raised by the numerics mark it
errored; SkipCase marks it skipped. Nothing escapes ``evaluate_case``.
"""

from __future__ import annotations

import cmath
import logging
import math
import time
from dataclasses import dataclass
from typing import Any, Callable, Dict, Mapping, NamedTuple, Optional, Sequence, Union

import numpy as np

from hurwitzlommel.config.tolerances import DEFAULT_PROFILE, ToleranceProfile
from hurwitzlommel.controls import (
    DEFAULT_CONTOUR,
    DEFAULT_QUADRATURE,
    DEFAULT_ROUTE,
    DEFAULT_SERIES,
    ContourSpec,
    EvalRoute,
    QuadratureSpec,
    SeriesControl,
)
from hurwitzlommel.errors import (
    ConfigurationError,
    DomainError,
    HurwitzLommelError,
    NoConvergence,
    SkipCase,
)
from hurwitzlommel.kernels.gamma import log_gamma, log_gamma_array
from hurwitzlommel.kernels.quadrature import (
    ComplexArray,
    FloatArray,
    QuadratureResult,
    exponential_tail,
    integrate_semi_infinite,
)
from hurwitzlommel.kernels.values import near_integer, on_negative_axis
from hurwitzlommel.lommel.functions import choose_route
from hurwitzlommel.lommel.masirevic import (
    DEFAULT_TERMS,
    a1_closed_form,
    a1_contiguous_form,
    masi_closed_form,
    masirevic_sum,
    masirevic_sum2,
    masirevic_t21_rhs,
    modilommel_closed_form,
)
from hurwitzlommel.lommel.series import (
    DirichletSum,
    DirichletWeights,
    befmas_second_form,
    hurwitz_from_lommel,
    lommel_dirichlet_sum,
    small_lommel_dirichlet_sum,
)
from hurwitzlommel.mellin.barnes import POLE_PROXIMITY, i_s_closed, i_s_line_result, inter_reassembly, residue_expansion
from hurwitzlommel.mellin.lemma import LemmaIntegralParams, lemma_lhs_quadrature, lemma_rhs
from hurwitzlommel.verify.cases import IdentityCase, IdentityId
from hurwitzlommel.verify.report import Status, VerificationReport
from hurwitzlommel.zeta.hurwitz import (
    em_shift,
    fourier_validity,
    hurwitz_from_befmas_closed,
    hurwitz_rhs_fourier,
    hurwitz_zeta_em,
    hurwitz_zeta_hermite,
)
from hurwitzlommel.zeta.phi import phi_lattice_sum
from hurwitzlommel.zeta.riemann import functional_equation_rhs, riemann_zeta, xi_completed

logger = logging.getLogger(__name__)

SERIES_TERMS = 5000
LATTICE_TERMS = 2000
TWO_PI = 2.0 * math.pi

_MISSING = object()


@dataclass(frozen=True)
class CheckOptions:
    """Numerical controls shared by every check of a run"""

    ctl: SeriesControl = DEFAULT_SERIES
    quad: QuadratureSpec = DEFAULT_QUADRATURE
    contour: ContourSpec = DEFAULT_CONTOUR
    route: EvalRoute = DEFAULT_ROUTE


DEFAULT_OPTIONS = CheckOptions()


class Evaluation(NamedTuple):
    lhs: complex
    rhs: complex
    diagnostics: Dict[str, Any]
    witnesses: Sequence[complex] = ()


Thunk = Callable[[], Evaluation]


class CaseParams:
    """Typed access to the parameters of a case"""

    def __init__(self, case: IdentityCase):
        self._values = case.params
        self._identity = case.identity_id.value

    def _get(self, name: str, default: Any) -> Any:
        if name in self._values:
            return self._values[name]
        if default is _MISSING:
            raise ConfigurationError(f"{self._identity} needs parameter {name!r}")
        return default

    def has(self, name: str) -> bool:
        return name in self._values

    def number(self, name: str, default: Any = _MISSING) -> complex:
        return complex(self._get(name, default))

    def real(self, name: str, default: Any = _MISSING) -> float:
        value = self._get(name, default)
        if isinstance(value, complex):
            raise ConfigurationError(f"{self._identity}: {name} must be real, got {value}")
        return float(value)

    def positive(self, name: str, default: Any = _MISSING) -> float:
        value = self.real(name, default)
        if not value > 0:
            raise ConfigurationError(f"{self._identity}: {name} must be positive, got {value:g}")
        return value

    def integer(self, name: str, default: Any = _MISSING, minimum: int = 0) -> int:
        value = self._get(name, default)
        if isinstance(value, complex) or float(value) != math.floor(float(value)):
            raise ConfigurationError(f"{self._identity}: {name} must be an integer, got {value}")
        number = int(value)
        if number < minimum:
            raise ConfigurationError(f"{self._identity}: {name} must be at least {minimum}, got {number}")
        return number


def _in_modular_strip(s: complex, identity: str) -> None:
    if not 0.0 < s.real < 2.0:
        raise ConfigurationError(f"{identity} needs 0 < Re(s) < 2, got s = {s}")
    if s == 1:
        raise ConfigurationError(f"{identity} excludes the pole s = 1")


def _optional(compute: Callable[[], complex], reference: complex) -> Union[float, str]:
    """|compute() - reference| for a secondary route, or the reason it is unavailable"""
    try:
        return abs(compute() - reference)
    except HurwitzLommelError as exc:
        return f"unavailable: {type(exc).__name__}"


# ---------------------------------------------------------------- identities


def _prepare_lemma21(p: CaseParams, options: CheckOptions) -> Thunk:
    params = LemmaIntegralParams(p.number("s"), p.positive("a"), p.integer("k", minimum=1))

    def run() -> Evaluation:
        quad = lemma_lhs_quadrature(params, options.quad)
        rhs = lemma_rhs(params, options.route)
        diagnostics: Dict[str, Any] = {
            "nodes_used": quad.nodes_used,
            "x_max": quad.x_max,
            "tail_bound": quad.tail_bound,
            "route": choose_route(params.s, params.z, options.route).value,
            "inter_reassembly_abs_err": _optional(
                lambda: inter_reassembly(params.s, params.a, params.k, options.contour), quad.value
            ),
        }
        return Evaluation(quad.value, rhs, diagnostics)

    return run


def _prepare_hermite_vs_em(p: CaseParams, options: CheckOptions) -> Thunk:
    s, a = p.number("s"), p.number("a")
    if s == 1:
        raise ConfigurationError("hermite_vs_em excludes the pole s = 1")
    if not a.real > 0:
        raise ConfigurationError(f"hermite_vs_em needs Re(a) > 0, got a = {a}")

    def run() -> Evaluation:
        lhs = hurwitz_zeta_hermite(s, a, options.quad)
        rhs = hurwitz_zeta_em(s, a)
        return Evaluation(lhs, rhs, {"em_shift": em_shift(s, a)})

    return run


def _prepare_hurwitz_formula(p: CaseParams, options: CheckOptions) -> Thunk:
    s, a = p.number("s"), p.real("a")
    reason = fourier_validity(s, a)
    if reason is not None:
        raise ConfigurationError(f"hurwitz_formula outside its validity region: {reason}")

    def run() -> Evaluation:
        lhs = hurwitz_zeta_em(s, a)
        rhs = hurwitz_rhs_fourier(s, a, options.ctl)
        diagnostics: Dict[str, Any] = {}
        if s.real < 0 and not near_integer(s):
            diagnostics["befmas_closed_abs_err"] = _optional(
                lambda: hurwitz_from_befmas_closed(s, a, options.ctl), lhs
            )
        return Evaluation(lhs, rhs, diagnostics)

    return run


def _prepare_functional_equation(p: CaseParams, options: CheckOptions) -> Thunk:
    s = p.number("s")
    if s.imag == 0.0 and s.real >= 0.0 and s.real == math.floor(s.real):
        raise ConfigurationError(f"the functional equation is evaluated away from s = 0, 1, 2, ..., got s = {s.real:g}")

    def run() -> Evaluation:
        return Evaluation(riemann_zeta(s), functional_equation_rhs(s), {})

    return run


def _prepare_befmas_expansion(p: CaseParams, options: CheckOptions) -> Thunk:
    s, a = p.number("s"), p.positive("a")
    K = p.integer("K", DEFAULT_TERMS, minimum=1)
    if s == 1:
        raise ConfigurationError("befmas_expansion excludes the pole s = 1")

    def run() -> Evaluation:
        lhs = hurwitz_zeta_em(s, a)
        series = hurwitz_from_lommel(s, a, K, options.route)
        diagnostics: Dict[str, Any] = {"terms_used": series.terms_used, "tail_estimate": series.tail_estimate}
        if s.real < 0 and 0 < a <= 1 and not near_integer(s):
            diagnostics["second_form_abs_err"] = _optional(
                lambda: befmas_second_form(s, a, K, options.ctl, options.route), lhs
            )
        return Evaluation(lhs, series.value, diagnostics)

    return run


def _prepare_masi_closed_form(p: CaseParams, options: CheckOptions) -> Thunk:
    s, a = p.real("s"), p.real("a")
    K = p.integer("K", SERIES_TERMS, minimum=1)
    if not s < 0:
        raise ConfigurationError(f"masi_closed_form needs s < 0, got s = {s:g}")
    if not 0 < a < 1:
        raise ConfigurationError(f"masi_closed_form needs 0 < a < 1, got a = {a:g}")

    def run() -> Evaluation:
        x = TWO_PI * a
        lhs = small_lommel_dirichlet_sum(s, x, K, ctl=options.ctl, route=options.route)
        rhs = masi_closed_form(s, a)
        diagnostics = {
            "terms_used": lhs.terms_used,
            "tail_estimate": lhs.tail_estimate,
            "first_sum_rhs_abs_err": abs(masirevic_t21_rhs(0, -s - 0.5, 0.5, x) - rhs),
        }
        return Evaluation(lhs.value, rhs, diagnostics)

    return run


def _prepare_a1_closed_form(p: CaseParams, options: CheckOptions) -> Thunk:
    s = p.real("s")
    K = p.integer("K", SERIES_TERMS, minimum=1)
    if not s < -1:
        raise ConfigurationError(f"a1_closed_form needs s < -1, got s = {s:g}")

    def run() -> Evaluation:
        lhs = small_lommel_dirichlet_sum(s, TWO_PI, K, ctl=options.ctl, route=options.route)
        rhs = a1_closed_form(s)
        diagnostics = {
            "terms_used": lhs.terms_used,
            "tail_estimate": lhs.tail_estimate,
            "contiguous_abs_err": abs(a1_contiguous_form(s) - rhs),
        }
        return Evaluation(lhs.value, rhs, diagnostics)

    return run


def _prepare_masirevic_t21(p: CaseParams, options: CheckOptions) -> Thunk:
    m = p.integer("m", minimum=0)
    mu, nu, x = p.real("mu"), p.real("nu"), p.real("x")
    K = p.integer("K", DEFAULT_TERMS, minimum=1)

    def run() -> Evaluation:
        result = masirevic_sum(m, mu, nu, x, options.ctl, K, options.route)
        return Evaluation(result.lhs, result.rhs, {"terms_used": result.terms_used, "tail_estimate": result.tail_estimate})

    return run


def _prepare_masirevic_t22(p: CaseParams, options: CheckOptions) -> Thunk:
    m = p.integer("m", minimum=1)
    mu, x = p.real("mu"), p.real("x")
    K = p.integer("K", DEFAULT_TERMS, minimum=1)

    def run() -> Evaluation:
        result = masirevic_sum2(m, mu, x, options.ctl, K, options.route)
        diagnostics: Dict[str, Any] = {"terms_used": result.terms_used, "tail_estimate": result.tail_estimate}
        witnesses = []
        # m = 1, x = 2 pi is the lower-order sum with its own closed form at s = -mu - 1
        if m == 1 and math.isclose(x, TWO_PI, rel_tol=1e-14):
            witnesses.append(modilommel_closed_form(-mu - 1.0))
        return Evaluation(result.lhs, result.rhs, diagnostics, tuple(witnesses))

    return run


def modular_side(s: complex, alpha: float, K: int, route: EvalRoute = DEFAULT_ROUTE) -> tuple[complex, DirichletSum]:
    """alpha^(s/2) (2 s (2 pi)^(s-1/2) sqrt(alpha) sum_m sigma_{1-s}(m) m^(s-1/2) S(2 pi m alpha) - zeta(s)/(2 alpha^s) - zeta(s-1)/((s-1) alpha))"""
    series = lommel_dirichlet_sum(s, TWO_PI * alpha, K, DirichletWeights.DIVISOR, route=route)
    log_alpha = math.log(alpha)
    lattice = 2.0 * s * cmath.exp((s - 0.5) * math.log(TWO_PI)) * math.sqrt(alpha) * series.value
    corrections = riemann_zeta(s) / (2.0 * cmath.exp(s * log_alpha)) + riemann_zeta(s - 1.0) / ((s - 1.0) * alpha)
    return cmath.exp(0.5 * s * log_alpha) * (lattice - corrections), series


def _prepare_modular_corollary(p: CaseParams, options: CheckOptions) -> Thunk:
    s, alpha = p.number("s"), p.positive("alpha")
    K = p.integer("K", SERIES_TERMS, minimum=1)
    _in_modular_strip(s, "modular_corollary")

    def run() -> Evaluation:
        lhs, forward = modular_side(s, alpha, K, options.route)
        rhs, backward = modular_side(s, 1.0 / alpha, K, options.route)
        diagnostics = {
            "terms_used": forward.terms_used,
            "tail_estimate_alpha": forward.tail_estimate,
            "tail_estimate_beta": backward.tail_estimate,
        }
        return Evaluation(lhs, rhs, diagnostics)

    return run


def _prepare_theorem31_phi_equality(p: CaseParams, options: CheckOptions) -> Thunk:
    s, alpha = p.number("s"), p.positive("alpha")
    N = p.integer("N", LATTICE_TERMS, minimum=1)
    K = p.integer("K", SERIES_TERMS, minimum=1)
    _in_modular_strip(s, "theorem31_phi_equality")

    def run() -> Evaluation:
        lattice = phi_lattice_sum(s, alpha, N)
        series = lommel_dirichlet_sum(s, TWO_PI * alpha, K, DirichletWeights.DIVISOR, route=options.route)
        rhs = 2.0 * s * cmath.exp((s - 0.5) * math.log(TWO_PI)) * math.sqrt(alpha) * series.value
        diagnostics = {
            "phi_terms_used": lattice.terms_used,
            "phi_tail": abs(lattice.tail),
            "terms_used": series.terms_used,
            "tail_estimate": series.tail_estimate,
        }
        return Evaluation(lattice.value, rhs, diagnostics)

    return run


def xi_integrand(s: complex, alpha: float, with_cosine: bool = True) -> Callable[[FloatArray], ComplexArray]:
    """Integrand of the Xi-integral side of the modular transformation, without its prefactor

    Gamma((s-2+it)/4) Gamma((s-2-it)/4) Xi((t+i(s-1))/2) Xi((t-i(s-1))/2) cos(t log(alpha)/2) / (s^2+t^2),
    where Xi((t +- i(s-1))/2) = xi(1 - s/2 + it/2) and xi(s/2 + it/2).
    """
    log_alpha = math.log(alpha)

    def f(t: FloatArray) -> ComplexArray:
        t = np.asarray(t, dtype=np.float64)
        gammas = np.exp(log_gamma_array((s - 2.0 + 1j * t) / 4.0) + log_gamma_array((s - 2.0 - 1j * t) / 4.0))
        xis = np.array(
            [xi_completed(1.0 - s / 2.0 + 0.5j * tk) * xi_completed(s / 2.0 + 0.5j * tk) for tk in t.ravel()],
            dtype=np.complex128,
        ).reshape(t.shape)
        values = gammas * xis / (s * s + t * t)
        if with_cosine:
            values = values * np.cos(0.5 * t * log_alpha)
        return values

    return f


def xi_integral(s: complex, alpha: float, quad: QuadratureSpec = DEFAULT_QUADRATURE) -> QuadratureResult:
    """8 (4 pi)^((s-4)/2) / Gamma(s) times the integral of ``xi_integrand`` over [0, inf)

    The integrand decays like e^(-pi t/2) times a power of t. The tail bound is
    empirical: four times the magnitude of the cosine-free integrand at the
    truncation point, integrated against that rate.
    """
    decay = 0.5 * math.pi
    envelope_f = xi_integrand(s, alpha, with_cosine=False)

    def envelope(x: float) -> float:
        return 4.0 * float(abs(envelope_f(np.array([x]))[0]))

    result = integrate_semi_infinite(
        xi_integrand(s, alpha),
        decay=decay,
        singularity_distance=max(min(abs(2.0 - s.real), abs(s.real)), 0.05),
        tail_bound=exponential_tail(envelope, decay, growth=2.0 + abs(s.real)),
        spec=quad,
    )
    prefactor = 8.0 * cmath.exp(0.5 * (s - 4.0) * math.log(4.0 * math.pi) - log_gamma(s))
    return QuadratureResult(prefactor * result.value, result.nodes_used, result.x_max, abs(prefactor) * result.tail_bound)


def _prepare_theorem31_xi_integral(p: CaseParams, options: CheckOptions) -> Thunk:
    s, alpha = p.number("s"), p.positive("alpha")
    K = p.integer("K", SERIES_TERMS, minimum=1)
    _in_modular_strip(s, "theorem31_xi_integral")

    def run() -> Evaluation:
        integral = xi_integral(s, alpha, options.quad)
        rhs, series = modular_side(s, alpha, K, options.route)
        diagnostics: Dict[str, Any] = {
            "nodes_used": integral.nodes_used,
            "t_max": integral.x_max,
            "tail_bound": integral.tail_bound,
            "terms_used": series.terms_used,
            "tail_estimate": series.tail_estimate,
        }
        if s.imag == 0.0:
            samples = xi_integrand(s, alpha)(np.linspace(0.0, integral.x_max, 33))
            diagnostics["max_imag_integrand"] = float(np.max(np.abs(samples.imag)))
        return Evaluation(integral.value, rhs, diagnostics)

    return run


def _prepare_mellin_triple(p: CaseParams, options: CheckOptions) -> Thunk:
    s, z = p.number("s"), p.number("z")
    if not s.real < 0:
        raise ConfigurationError(f"mellin_triple needs Re(s) < 0 for the residue expansion, got s = {s}")
    if near_integer(s, POLE_PROXIMITY):
        raise ConfigurationError(f"mellin_triple needs s away from the integers, got s = {s}")
    if on_negative_axis(z):
        raise ConfigurationError(f"mellin_triple needs z off (-inf, 0], got z = {z}")
    c = p.real("c") if p.has("c") else None
    c_alt = p.real("c_alt") if p.has("c_alt") else None
    contour = ContourSpec(c, options.contour.t_max, options.contour.nodes, options.contour.tol)

    def run() -> Evaluation:
        line = i_s_line_result(s, z, contour)
        closed = i_s_closed(s, z, options.ctl)
        try:
            residue = residue_expansion(s, z, ctl=options.ctl)
        except NoConvergence as exc:
            raise SkipCase(f"residue expansion did not converge: {exc}") from exc
        diagnostics: Dict[str, Any] = {
            "c": line.c,
            "t_max": line.t_max,
            "nodes_used": line.nodes_used,
            "tail_bound": line.tail_bound,
            "residue_terms_used": residue.terms_used,
            "residue_cancellation_estimate": residue.cancellation_estimate,
            "closed_vs_residue_abs_err": abs(closed - residue.value),
        }
        witnesses = [residue.value]
        if c_alt is not None:
            alternate = i_s_line_result(s, z, ContourSpec(c_alt, options.contour.t_max, options.contour.nodes, options.contour.tol))
            diagnostics["c_alt"] = alternate.c
            diagnostics["contour_abs_err"] = abs(alternate.value - line.value)
            witnesses.append(alternate.value)
        return Evaluation(line.value, closed, diagnostics, tuple(witnesses))

    return run


PREPARERS: Dict[IdentityId, Callable[[CaseParams, CheckOptions], Thunk]] = {
    IdentityId.LEMMA21: _prepare_lemma21,
    IdentityId.HERMITE_VS_EM: _prepare_hermite_vs_em,
    IdentityId.HURWITZ_FORMULA: _prepare_hurwitz_formula,
    IdentityId.FUNCTIONAL_EQUATION: _prepare_functional_equation,
    IdentityId.BEFMAS_EXPANSION: _prepare_befmas_expansion,
    IdentityId.MASI_CLOSED_FORM: _prepare_masi_closed_form,
    IdentityId.A1_CLOSED_FORM: _prepare_a1_closed_form,
    IdentityId.MASIREVIC_T21: _prepare_masirevic_t21,
    IdentityId.MASIREVIC_T22: _prepare_masirevic_t22,
    IdentityId.MODULAR_COROLLARY: _prepare_modular_corollary,
    IdentityId.THEOREM31_PHI_EQUALITY: _prepare_theorem31_phi_equality,
    IdentityId.THEOREM31_XI_INTEGRAL: _prepare_theorem31_xi_integral,
    IdentityId.MELLIN_TRIPLE: _prepare_mellin_triple,
}

#: identities left out of the default suite unless asked for
STRETCH_IDENTITIES = frozenset({IdentityId.THEOREM31_XI_INTEGRAL})


def _evaluate(case: IdentityCase, options: CheckOptions) -> VerificationReport:
    try:
        run = PREPARERS[case.identity_id](CaseParams(case), options)
    except SkipCase as e:
        return VerificationReport.outcome(case, Status.SKIPPED, str(e))
    except (ConfigurationError, DomainError) as e:
        return VerificationReport.outcome(case, Status.CONFIG_ERROR, str(e))

    try:
        result = run()
    except SkipCase as e:
        return VerificationReport.outcome(case, Status.SKIPPED, str(e))
    except (ConfigurationError, DomainError) as e:
        return VerificationReport.outcome(case, Status.CONFIG_ERROR, str(e))
    except (HurwitzLommelError, ArithmeticError, ValueError) as e:
        logger.debug(f"{case.identity_id.value} errored: {type(e).__name__}: {e}")
        return VerificationReport.outcome(case, Status.ERRORED, f"{type(e).__name__}: {e}")
    except Exception as e:
        logger.warning(f"Unexpected {type(e).__name__} in {case.identity_id.value}: {e}")
        return VerificationReport.outcome(case, Status.ERRORED, f"{type(e).__name__}: {e}")

    return VerificationReport.evaluated(case, result.lhs, result.rhs, result.diagnostics, result.witnesses)


def evaluate_case(case: IdentityCase, options: CheckOptions = DEFAULT_OPTIONS) -> VerificationReport:
    """Evaluate one case; every outcome, including exceptions, becomes a report"""
    start = time.perf_counter()
    report = _evaluate(case, options)
    return report.with_wall_time(time.perf_counter() - start)


# ------------------------------------------------------------- public checks


def _check(
    identity: IdentityId,
    params: Mapping[str, Any],
    options: CheckOptions,
    tol_abs: Optional[float],
    tol_rel: Optional[float],
    profile: ToleranceProfile,
) -> VerificationReport:
    case = IdentityCase.create(identity, params, tol_abs=tol_abs, tol_rel=tol_rel, profile=profile)
    return evaluate_case(case, options)


def check_lemma21(
    s: Any,
    a: float,
    k: int,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
    *,
    tol_abs: Optional[float] = None,
    tol_rel: Optional[float] = None,
    profile: ToleranceProfile = DEFAULT_PROFILE,
) -> VerificationReport:
    """Exponential-arctan integral against s sqrt(a) (2 pi k)^(s-1/2) S_{-s-1/2,1/2}(2 pi a k)"""
    return _check(IdentityId.LEMMA21, {"s": s, "a": a, "k": k}, CheckOptions(quad=quad), tol_abs, tol_rel, profile)


def check_hermite_vs_em(
    s: Any,
    a: Any,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
    *,
    tol_abs: Optional[float] = None,
    tol_rel: Optional[float] = None,
    profile: ToleranceProfile = DEFAULT_PROFILE,
) -> VerificationReport:
    return _check(IdentityId.HERMITE_VS_EM, {"s": s, "a": a}, CheckOptions(quad=quad), tol_abs, tol_rel, profile)


def check_hurwitz_formula(
    s: Any,
    a: float,
    ctl: SeriesControl = DEFAULT_SERIES,
    *,
    tol_abs: Optional[float] = None,
    tol_rel: Optional[float] = None,
    profile: ToleranceProfile = DEFAULT_PROFILE,
) -> VerificationReport:
    """zeta(s, a) against the trigonometric expansion"""
    return _check(IdentityId.HURWITZ_FORMULA, {"s": s, "a": a}, CheckOptions(ctl=ctl), tol_abs, tol_rel, profile)


def check_functional_equation(
    s: Any,
    *,
    tol_abs: Optional[float] = None,
    tol_rel: Optional[float] = None,
    profile: ToleranceProfile = DEFAULT_PROFILE,
) -> VerificationReport:
    return _check(IdentityId.FUNCTIONAL_EQUATION, {"s": s}, DEFAULT_OPTIONS, tol_abs, tol_rel, profile)


def check_befmas_expansion(
    s: Any,
    a: float,
    K: int = DEFAULT_TERMS,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
    *,
    tol_abs: Optional[float] = None,
    tol_rel: Optional[float] = None,
    profile: ToleranceProfile = DEFAULT_PROFILE,
) -> VerificationReport:
    """zeta(s, a) against its Lommel expansion truncated at K terms"""
    return _check(IdentityId.BEFMAS_EXPANSION, {"s": s, "a": a, "K": K}, CheckOptions(quad=quad), tol_abs, tol_rel, profile)


def check_masi_closed_form(
    s: float,
    a: float,
    K: int = SERIES_TERMS,
    *,
    tol_abs: Optional[float] = None,
    tol_rel: Optional[float] = None,
    profile: ToleranceProfile = DEFAULT_PROFILE,
) -> VerificationReport:
    return _check(IdentityId.MASI_CLOSED_FORM, {"s": s, "a": a, "K": K}, DEFAULT_OPTIONS, tol_abs, tol_rel, profile)


def check_a1_closed_form(
    s: float,
    K: int = SERIES_TERMS,
    *,
    tol_abs: Optional[float] = None,
    tol_rel: Optional[float] = None,
    profile: ToleranceProfile = DEFAULT_PROFILE,
) -> VerificationReport:
    return _check(IdentityId.A1_CLOSED_FORM, {"s": s, "K": K}, DEFAULT_OPTIONS, tol_abs, tol_rel, profile)


def check_masirevic(
    theorem: str,
    params: Mapping[str, Any],
    ctl: SeriesControl = DEFAULT_SERIES,
    *,
    tol_abs: Optional[float] = None,
    tol_rel: Optional[float] = None,
    profile: ToleranceProfile = DEFAULT_PROFILE,
) -> VerificationReport:
    """The first (``"t21"``: m, mu, nu, x) or second (``"t22"``: m, mu, x) closed-form sum"""
    identities = {"t21": IdentityId.MASIREVIC_T21, "t22": IdentityId.MASIREVIC_T22}
    if theorem not in identities:
        raise ConfigurationError(f"theorem must be one of {', '.join(identities)}, got {theorem!r}")
    return _check(identities[theorem], params, CheckOptions(ctl=ctl), tol_abs, tol_rel, profile)


def check_modular_corollary(
    s: Any,
    alpha: float,
    K: int = SERIES_TERMS,
    route: EvalRoute = DEFAULT_ROUTE,
    *,
    tol_abs: Optional[float] = None,
    tol_rel: Optional[float] = None,
    profile: ToleranceProfile = DEFAULT_PROFILE,
) -> VerificationReport:
    """F(alpha) against F(1/alpha)"""
    return _check(IdentityId.MODULAR_COROLLARY, {"s": s, "alpha": alpha, "K": K}, CheckOptions(route=route), tol_abs, tol_rel, profile)


def check_theorem31_phi_equality(
    s: Any,
    alpha: float,
    N: int = LATTICE_TERMS,
    K: int = SERIES_TERMS,
    *,
    tol_abs: Optional[float] = None,
    tol_rel: Optional[float] = None,
    profile: ToleranceProfile = DEFAULT_PROFILE,
) -> VerificationReport:
    """sum_n phi(s, n alpha) against the divisor-weighted Lommel series"""
    params = {"s": s, "alpha": alpha, "N": N, "K": K}
    return _check(IdentityId.THEOREM31_PHI_EQUALITY, params, DEFAULT_OPTIONS, tol_abs, tol_rel, profile)


def check_theorem31_xi_integral(
    s: Any,
    alpha: float,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
    K: int = SERIES_TERMS,
    *,
    tol_abs: Optional[float] = None,
    tol_rel: Optional[float] = None,
    profile: ToleranceProfile = DEFAULT_PROFILE,
) -> VerificationReport:
    """The Xi integral against F(alpha)"""
    params = {"s": s, "alpha": alpha, "K": K}
    return _check(IdentityId.THEOREM31_XI_INTEGRAL, params, CheckOptions(quad=quad), tol_abs, tol_rel, profile)


def check_mellin_triple(
    s: Any,
    z: Any,
    contour: ContourSpec = DEFAULT_CONTOUR,
    c_alt: Optional[float] = None,
    *,
    tol_abs: Optional[float] = None,
    tol_rel: Optional[float] = None,
    profile: ToleranceProfile = DEFAULT_PROFILE,
) -> VerificationReport:
    """I_s(z) by line integral, residues and closed form, optionally on a second abscissa"""
    params: Dict[str, Any] = {"s": s, "z": z}
    if contour.c is not None:
        params["c"] = contour.c
    if c_alt is not None:
        params["c_alt"] = c_alt
    return _check(IdentityId.MELLIN_TRIPLE, params, CheckOptions(contour=contour), tol_abs, tol_rel, profile)
