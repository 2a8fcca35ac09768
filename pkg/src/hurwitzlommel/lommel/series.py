"""Dirichlet series of the special Lommel function

    T = sum_{k>=1} w(k) k^e S_{-s-1/2,1/2}(k x)

S_{-s-1/2,1/2}(z) has the non-oscillating expansion sum_j (-1)^j (s+1)_{2j} z^(-s-3/2-2j).
Subtracting its first few terms from every summand leaves a remainder decaying
like k^(e-s-3/2-2J), while the subtracted part sums in closed form to
sum_j c_j x^(-s-3/2-2j) D(s + 3/2 + 2j - e), with D(w) = zeta(w) for unit weights
and zeta(w) zeta(w - 1 + s) for w(k) = sigma_{1-s}(k).

The small function s_{-s-1/2,1/2} = S - B carries the oscillating part
B(z) = -Gamma(-s) sin(z + pi s/2) / sqrt(z), whose Dirichlet series is summed
through ``polylog_sum``.
"""

from __future__ import annotations

import cmath
import logging
import math
from enum import Enum
from typing import NamedTuple, Optional, Union

import numpy as np

from hurwitzlommel.controls import DEFAULT_ROUTE, DEFAULT_SERIES, EvalRoute, SeriesControl
from hurwitzlommel.errors import DomainError
from hurwitzlommel.kernels.divisor import sigma_table
from hurwitzlommel.kernels.gamma import gamma
from hurwitzlommel.kernels.series import polylog_sum
from hurwitzlommel.kernels.values import ComplexLike, to_complex
from hurwitzlommel.lommel.functions import lommel_S_special, special_asymptotic_coefficients
from hurwitzlommel.zeta.hurwitz import hurwitz_from_befmas_closed
from hurwitzlommel.zeta.riemann import riemann_zeta

logger = logging.getLogger(__name__)

ASYMPTOTIC_TERMS = 3


class DirichletWeights(str, Enum):
    UNIT = "unit"
    DIVISOR = "divisor"


class DirichletSum(NamedTuple):
    value: complex
    terms_used: int
    tail_estimate: float


def _weights(kind: DirichletWeights, s: complex, count: int) -> np.ndarray:
    if kind is DirichletWeights.DIVISOR:
        return sigma_table(1.0 - s, count)[1:]
    return np.ones(count, dtype=np.complex128)


def _dirichlet_constant(kind: DirichletWeights, s: complex, w: complex) -> complex:
    if kind is DirichletWeights.DIVISOR:
        return riemann_zeta(w) * riemann_zeta(w - 1.0 + s)
    return riemann_zeta(w)


def unit_circle_point(x: float) -> complex:
    """e^(ix) with exact 1 at multiples of 2 pi"""
    turns = x / (2.0 * math.pi)
    if abs(turns - round(turns)) < 1e-14:
        return 1.0 + 0j
    return cmath.exp(1j * x)


def lommel_dirichlet_sum(
    s: ComplexLike,
    x: float,
    K: int,
    weights: Union[DirichletWeights, str] = DirichletWeights.UNIT,
    exponent: Optional[ComplexLike] = None,
    route: EvalRoute = DEFAULT_ROUTE,
    asymptotic_terms: int = ASYMPTOTIC_TERMS,
) -> DirichletSum:
    """sum_{k>=1} w(k) k^e S_{-s-1/2,1/2}(k x), e defaulting to s - 1/2

    The first K summands are evaluated exactly; the rest enter only through the
    closed-form part, so ``tail_estimate`` bounds what is dropped.
    """
    s = to_complex(s, "s")
    x = float(x)
    kind = DirichletWeights(weights)
    e = s - 0.5 if exponent is None else to_complex(exponent, "exponent")
    if not x > 0:
        raise DomainError(f"x must be positive, got {x:g}")
    if K < 1:
        raise DomainError(f"K must be positive, got {K}")
    decay = s + 1.5 - e
    threshold = 1.0 if kind is DirichletWeights.UNIT else 2.0 - s.real
    if decay.real <= max(1.0, threshold):
        raise DomainError(f"sum_k w(k) k^e S(kx) diverges for s = {s}, e = {e}")

    coefficients = special_asymptotic_coefficients(s, asymptotic_terms)
    k = np.arange(1, K + 1, dtype=np.float64)
    w = _weights(kind, s, K)
    z = k * x
    exact = np.array([lommel_S_special(s, float(zk), route) for zk in z], dtype=np.complex128)
    expansion = np.zeros(K, dtype=np.complex128)
    for j, c in enumerate(coefficients):
        expansion += c * np.exp((-s - 1.5 - 2 * j) * np.log(z))
    remainder = np.sum(w * np.exp(e * np.log(k)) * (exact - expansion))

    closed = 0j
    for j, c in enumerate(coefficients):
        power = cmath.exp((-s - 1.5 - 2 * j) * math.log(x))
        closed += c * power * _dirichlet_constant(kind, s, decay + 2 * j)

    J = asymptotic_terms
    next_coefficient = abs(special_asymptotic_coefficients(s, J + 1)[-1])
    q = (decay + 2 * J).real - (max(0.0, 1.0 - s.real) if kind is DirichletWeights.DIVISOR else 0.0)
    tail = next_coefficient * x ** (-(s.real + 1.5 + 2 * J)) * K ** (1.0 - q) / max(q - 1.0, 1e-3)
    if kind is DirichletWeights.DIVISOR:
        tail *= 1.0 + math.log(K)
    logger.debug(f"Lommel Dirichlet sum s={s}, x={x:g}, K={K}, weights={kind.value}: tail~{tail:.3g}")
    return DirichletSum(complex(remainder) + closed, K, float(tail))


def bessel_dirichlet_sum(
    s: ComplexLike, x: float, exponent: ComplexLike, ctl: SeriesControl = DEFAULT_SERIES
) -> complex:
    """sum_{k>=1} k^e B(k x) with B(z) = -Gamma(-s) sin(z + pi s/2) / sqrt(z)"""
    s = to_complex(s, "s")
    e = to_complex(exponent, "exponent")
    q = 0.5 - e
    z = unit_circle_point(x)
    phase = cmath.exp(0.5j * math.pi * s)
    forward = polylog_sum(z, q, ctl).value
    backward = forward if z == 1 else polylog_sum(z.conjugate(), q, ctl).value
    sine_sum = (phase * forward - backward / phase) / 2j
    return -gamma(-s) / math.sqrt(x) * sine_sum


def small_lommel_dirichlet_sum(
    s: ComplexLike,
    x: float,
    K: int,
    exponent: Optional[ComplexLike] = None,
    ctl: SeriesControl = DEFAULT_SERIES,
    route: EvalRoute = DEFAULT_ROUTE,
) -> DirichletSum:
    """sum_{k>=1} k^e s_{-s-1/2,1/2}(k x), e defaulting to s - 1/2"""
    s = to_complex(s, "s")
    e = s - 0.5 if exponent is None else to_complex(exponent, "exponent")
    full = lommel_dirichlet_sum(s, x, K, DirichletWeights.UNIT, e, route)
    oscillating = bessel_dirichlet_sum(s, x, e, ctl)
    return DirichletSum(full.value - oscillating, full.terms_used, full.tail_estimate)


def _explicit_terms(s: complex, a: float) -> complex:
    """1/2 a^-s + a^(1-s)/(s-1)"""
    log_a = math.log(a)
    return 0.5 * cmath.exp(-s * log_a) + cmath.exp((1.0 - s) * log_a) / (s - 1.0)


def _lommel_prefactor(s: complex, a: float) -> complex:
    """2 s sqrt(a) (2 pi)^(s-1/2)"""
    return 2.0 * s * math.sqrt(a) * cmath.exp((s - 0.5) * math.log(2.0 * math.pi))


def hurwitz_from_lommel(
    s: ComplexLike, a: float, K: int, route: EvalRoute = DEFAULT_ROUTE
) -> DirichletSum:
    """zeta(s, a) = 1/2 a^-s + a^(1-s)/(s-1) + 2 s sqrt(a) (2 pi)^(s-1/2) sum_k k^(s-1/2) S_{-s-1/2,1/2}(2 pi a k)"""
    s = to_complex(s, "s")
    a = float(a)
    if not a > 0:
        raise DomainError(f"a must be positive, got {a:g}")
    if s == 1:
        raise DomainError("the Lommel expansion of zeta(s, a) excludes s = 1")
    series = lommel_dirichlet_sum(s, 2.0 * math.pi * a, K, DirichletWeights.UNIT, route=route)
    prefactor = _lommel_prefactor(s, a)
    return DirichletSum(
        _explicit_terms(s, a) + prefactor * series.value,
        series.terms_used,
        abs(prefactor) * series.tail_estimate,
    )


def befmas_second_form(
    s: ComplexLike,
    a: float,
    K: int,
    ctl: SeriesControl = DEFAULT_SERIES,
    route: EvalRoute = DEFAULT_ROUTE,
) -> complex:
    """zeta(s, a) through the small Lommel function and the trigonometric series

    1/2 a^-s + a^(1-s)/(s-1) + 2 s sqrt(a) (2 pi)^(s-1/2) sum_k k^(s-1/2) s_{-s-1/2,1/2}(2 pi a k)
      + (2 pi)^s / (Gamma(s) sin(pi s)) sum_k sin(pi (4ak + s)/2) / k^(1-s)

    Both series converge separately only for Re(s) < 0 and 0 < a <= 1.
    """
    s = to_complex(s, "s")
    a = float(a)
    if not (s.real < 0.0 and 0.0 < a <= 1.0):
        raise DomainError(f"the split expansion needs Re(s) < 0 and 0 < a <= 1, got s = {s}, a = {a:g}")
    small = small_lommel_dirichlet_sum(s, 2.0 * math.pi * a, K, ctl=ctl, route=route)
    trigonometric = hurwitz_from_befmas_closed(s, a, ctl)
    return _explicit_terms(s, a) + _lommel_prefactor(s, a) * small.value + trigonometric
