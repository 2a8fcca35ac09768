"""The exponential-arctan integral and the two inverse Mellin pairs behind it

    L(s, a, k) = int_0^inf e^(-2 pi k x) sin(s arctan(x/a)) / (a^2 + x^2)^(s/2) dx
               = s sqrt(a) (2 pi k)^(s-1/2) S_{-s-1/2,1/2}(2 pi a k)
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Union

import numpy as np

from hurwitzlommel.controls import DEFAULT_CONTOUR, DEFAULT_QUADRATURE, DEFAULT_ROUTE, ContourSpec, EvalRoute, QuadratureSpec
from hurwitzlommel.errors import ConfigurationError, ContourError, DomainError
from hurwitzlommel.kernels.gamma import log_gamma, log_gamma_array
from hurwitzlommel.kernels.quadrature import (
    ComplexArray,
    FloatArray,
    QuadratureResult,
    exponential_tail,
    integrate_semi_infinite,
)
from hurwitzlommel.kernels.values import ComplexLike, to_complex
from hurwitzlommel.lommel.functions import lommel_S_special
from hurwitzlommel.mellin.barnes import line_integral, log_pi_sec, stirling_cutoff

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LemmaIntegralParams:
    """Parameters (s, a, k) of the exponential-arctan integral"""

    s: complex
    a: float
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", to_complex(self.s, "s"))
        if not (isinstance(self.a, (int, float)) and self.a > 0 and math.isfinite(self.a)):
            raise ConfigurationError(f"a must be a positive real number, got {self.a!r}")
        object.__setattr__(self, "a", float(self.a))
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise ConfigurationError(f"k must be a positive integer, got {self.k!r}")

    @property
    def z(self) -> float:
        """Lommel argument 2 pi a k"""
        return 2.0 * math.pi * self.a * self.k


def lemma_integrand(s: complex, a: float, k: int) -> Callable[[FloatArray], ComplexArray]:
    decay = 2.0 * math.pi * k

    def f(x: FloatArray) -> ComplexArray:
        theta = np.arctan(x / a)
        return np.sin(s * theta) * np.exp(-0.5 * s * np.log(a * a + x * x) - decay * x)

    return f


def lemma_lhs_quadrature(p: LemmaIntegralParams, quad: QuadratureSpec = DEFAULT_QUADRATURE) -> QuadratureResult:
    """L(s, a, k) with its quadrature diagnostics"""
    s, a, k = p.s, p.a, p.k
    if s == 0:
        return QuadratureResult(0j, 0, 0.0, 0.0)
    decay = 2.0 * math.pi * k
    # |sin(s theta)| <= e^(|Im s| theta), theta in [0, pi/2)
    spread = math.exp(0.5 * math.pi * abs(s.imag))

    def envelope(x: float) -> float:
        return spread * math.exp(-0.5 * s.real * math.log(a * a + x * x) - decay * x)

    return integrate_semi_infinite(
        lemma_integrand(s, a, k),
        decay=decay,
        singularity_distance=a,
        tail_bound=exponential_tail(envelope, decay, growth=max(0.0, -s.real)),
        spec=quad,
    )


def lemma_lhs_integral(p: LemmaIntegralParams, quad: QuadratureSpec = DEFAULT_QUADRATURE) -> complex:
    """int_0^inf e^(-2 pi k x) sin(s arctan(x/a)) / (a^2 + x^2)^(s/2) dx"""
    return lemma_lhs_quadrature(p, quad).value


def lemma_rhs(p: LemmaIntegralParams, route: EvalRoute = DEFAULT_ROUTE) -> complex:
    """s sqrt(a) (2 pi k)^(s-1/2) S_{-s-1/2,1/2}(2 pi a k)"""
    s = p.s
    if s == 0:
        return 0j
    factor = s * math.sqrt(p.a) * cmath.exp((s - 0.5) * math.log(2.0 * math.pi * p.k))
    return factor * lommel_S_special(s, p.z, route)


class MellinKernel(str, Enum):
    EXP_KERNEL = "exp_kernel"
    ARCTAN_KERNEL = "arctan_kernel"


def exp_kernel_line(y: float, k: float, c: float, contour: ContourSpec) -> complex:
    """1/(2 pi i) int_(c) Gamma(xi) (2 pi k y)^(-xi) dxi, which equals e^(-2 pi k y)"""
    if not c > 0:
        raise ContourError(f"the exponential pair needs c > 0, got c = {c:g}")
    log_scale = math.log(2.0 * math.pi * k * y)
    # |Gamma(c+it)| <= 2 sqrt(2 pi) |t|^(c-1/2) e^(-pi|t|/2), two tails, 1/(2 pi)
    constant = 2.0 * 2.0 * math.sqrt(2.0 * math.pi) * math.exp(-c * log_scale) / (2.0 * math.pi)
    t_max, _ = stirling_cutoff(constant, c - 0.5, 0.5 * math.pi, contour.tol, 1.0 + c * c)

    def log_integrand(xi: np.ndarray) -> np.ndarray:
        return log_gamma_array(xi) - xi * log_scale

    value, _ = line_integral(log_integrand, c, t_max, contour.nodes, min(1.0, 2.0 * c))
    return value


def arctan_kernel_line(y: float, s: complex, a: float, c: float, contour: ContourSpec) -> complex:
    """1/(2 pi i) int_(c) Gamma(s-xi) Gamma(xi) sin(pi xi/2) a^(xi-s) y^(-xi) / Gamma(s) dxi

    Gamma(xi) sin(pi xi/2) is written as pi / (2 cos(pi xi/2) Gamma(1-xi)), which is
    regular at xi = 0.
    """
    if not -1.0 < c < s.real:
        raise ContourError(f"the arctan pair needs -1 < c < Re(s), got c = {c:g}, Re(s) = {s.real:g}")
    log_a = math.log(a)
    log_y = math.log(y)
    log_norm = log_gamma(s)
    # |Gamma(s-xi) Gamma(xi) sin(pi xi/2)| ~ pi |t|^(Re s - 1) e^(-pi|t|/2)
    power = s.real - 1.0
    spread = max(2.0 ** (-power), 1.5**power)
    constant = (
        2.0 * 4.0 * math.pi * math.exp(0.5 * math.pi * abs(s.imag)) * spread
        * math.exp(c * (log_a - log_y) - s.real * log_a - log_norm.real) / (2.0 * math.pi)
    )
    start = 2.0 * abs(s.imag) + 1.0 + (s.real - c) ** 2 + c * c
    t_max, _ = stirling_cutoff(constant, power, 0.5 * math.pi, contour.tol, start)

    def log_integrand(xi: np.ndarray) -> np.ndarray:
        return (
            log_gamma_array(s - xi)
            + log_pi_sec(xi)
            - math.log(2.0)
            - log_gamma_array(1.0 - xi)
            + (xi - s) * log_a
            - xi * log_y
            - log_norm
        )

    gap = min(c + 1.0, s.real - c)
    value, _ = line_integral(log_integrand, c, t_max, contour.nodes, min(1.0, 2.0 * gap))
    return value


def mellin_pair_check(
    which: Union[MellinKernel, str],
    y: float,
    *,
    k: float = 1.0,
    s: Optional[ComplexLike] = None,
    a: float = 1.0,
    c: Optional[float] = None,
    contour: ContourSpec = DEFAULT_CONTOUR,
) -> float:
    """|inverse Mellin line integral - closed kernel| for one of the two pairs"""
    kind = MellinKernel(which)
    y = float(y)
    if not y > 0:
        raise DomainError(f"y must be positive, got {y:g}")
    if kind is MellinKernel.EXP_KERNEL:
        if not k > 0:
            raise DomainError(f"k must be positive, got {k:g}")
        line = exp_kernel_line(y, k, 1.0 if c is None else float(c), contour)
        closed = complex(math.exp(-2.0 * math.pi * k * y))
    else:
        if s is None:
            raise DomainError("the arctan pair needs s")
        s = to_complex(s, "s")
        if not a > 0:
            raise DomainError(f"a must be positive, got {a:g}")
        abscissa = 0.5 * (-1.0 + min(s.real, 1.0)) if c is None else float(c)
        line = arctan_kernel_line(y, s, a, abscissa, contour)
        closed = cmath.sin(s * math.atan(y / a)) * cmath.exp(-0.5 * s * math.log(y * y + a * a))
    residual = abs(line - closed)
    logger.debug(f"Mellin pair {kind.value} at y={y:g}: residual {residual:.3g}")
    return residual
