"""Closed-form sums of s_{mu,nu}(kx) over k and their special cases

Two families of sums are evaluated both ways:

    sum_k s_{mu,nu}(kx) / k^(2m+mu+1)           0 < x < 2 pi, m >= 0
    sum_k s_{mu-3/2,1/2}(kx) / k^(2m+mu-1/2)    0 <= x <= 2 pi, m >= 1, mu > 0

The right-hand sides are finite combinations of gamma and zeta values. The
left-hand sides split s = S - B. At nu = 1/2 (the order the zeta identities use)
the S part goes through the rearranged Dirichlet series of ``lommel.series`` and
the oscillating Bessel part B through ``polylog_sum``. Other orders take s from
its ascending series for kx <= 30; beyond that S is replaced by its asymptotic
expansion, summed in closed form through zeta, and B is summed term by term.
"""

from __future__ import annotations

import cmath
import logging
import math
from typing import NamedTuple

import numpy as np
from scipy import special

from hurwitzlommel.controls import DEFAULT_ROUTE, DEFAULT_SERIES, EvalRoute, SeriesControl
from hurwitzlommel.errors import DomainError
from hurwitzlommel.kernels.gamma import cospi, gamma, rgamma, sinpi
from hurwitzlommel.kernels.values import ComplexLike, to_complex
from hurwitzlommel.lommel.functions import LommelOrder, lommel_s_series
from hurwitzlommel.lommel.series import small_lommel_dirichlet_sum
from hurwitzlommel.zeta.riemann import riemann_zeta

logger = logging.getLogger(__name__)

DEFAULT_TERMS = 2000
ASCENDING_CUTOFF = 30.0
EXPANSION_TERMS = 12


class MasirevicSum(NamedTuple):
    lhs: complex
    rhs: complex
    terms_used: int
    tail_estimate: float


def _half_order_sum(mu: float, x: float, power: float, K: int, ctl: SeriesControl, route: EvalRoute) -> tuple[complex, int, float]:
    """sum_k s_{mu,1/2}(kx) / k^power"""
    # s_{mu,1/2} is the special order with s = -mu - 1/2
    result = small_lommel_dirichlet_sum(-mu - 0.5, x, K, exponent=-power, ctl=ctl, route=route)
    return result.value, result.terms_used, result.tail_estimate


def _expansion_coefficients(mu: float, nu: float, terms: int) -> list[float]:
    """(-1)^j prod_{i<=j} ((mu-2i+1)^2 - nu^2), the large-z coefficients of S_{mu,nu}"""
    coefficients = [1.0]
    for i in range(1, terms + 1):
        coefficients.append(-coefficients[-1] * ((mu - 2 * i + 1.0) ** 2 - nu * nu))
    return coefficients


def _general_order_sum(mu: float, nu: float, x: float, power: float, K: int, ctl: SeriesControl) -> tuple[complex, int, float]:
    """sum_k s_{mu,nu}(kx) / k^power for real orders"""
    order = LommelOrder(mu, nu)
    k0 = min(K, int(ASCENDING_CUTOFF // x))
    head = 0j
    for k in range(1, k0 + 1):
        head += lommel_s_series(order, k * x, ctl)[0] / k ** power

    # S_{mu,nu}(kx) for k > k0 through its expansion: sum_{k>k0} (kx)^(mu-1-2j) / k^power
    coefficients = _expansion_coefficients(mu, nu, EXPANSION_TERMS)
    expansion = 0j
    for j, c in enumerate(coefficients[:-1]):
        # q > 1; the remainder is zeta(q, k0+1) itself, never zeta(q) minus the head
        q = power - mu + 1.0 + 2 * j
        expansion += c * x ** (mu - 1.0 - 2 * j) * float(special.zeta(q, k0 + 1.0))

    # B = S - s, summed explicitly over k0 < k <= K
    g1 = (mu - nu + 1.0) / 2.0
    g2 = (mu + nu + 1.0) / 2.0
    amplitude = 2.0 ** (mu - 1.0) * (gamma(g1) * gamma(g2)).real
    k = np.arange(k0 + 1, K + 1, dtype=np.float64)
    z = k * x
    bessel = amplitude * (sinpi((mu - nu) / 2.0).real * special.jv(nu, z) - cospi((mu - nu) / 2.0).real * special.yv(nu, z))
    oscillating = float(np.sum(bessel / k ** power))

    q_last = power - mu + 1.0 + 2 * (len(coefficients) - 1)
    first = k0 + 1
    dropped = abs(coefficients[-1]) * (first * x) ** (mu - 1.0 - 2 * (len(coefficients) - 1)) / first ** power
    tail = dropped * first / max(q_last - 1.0, 1.0)
    # summation by parts for the oscillating remainder beyond K
    tail += abs(amplitude) * math.sqrt(2.0 / (math.pi * x)) * 2.0 * (K + 1.0) ** -(power + 0.5) / max(abs(math.sin(x / 2.0)), 1e-3)
    return head + expansion - oscillating, K, float(tail)


def masirevic_t21_rhs(m: int, mu: float, nu: float, x: float) -> complex:
    """Closed form of sum_k s_{mu,nu}(kx) / k^(2m+mu+1)"""
    half = x / 2.0
    minus = (mu - nu) / 2.0
    plus = (mu + nu) / 2.0
    leading = (-1) ** m * math.pi / 2.0 * rgamma(m + 1.0 + minus) * rgamma(m + 1.0 + plus) * half ** (2 * m - 1)
    zeta_terms = 0j
    for n in range(m + 1):
        weight = rgamma(n + 1.5 + minus) * rgamma(n + 1.5 + plus)
        zeta_terms += (-1) ** n * riemann_zeta(2 * m - 2 * n) * weight * half ** (2 * n)
    prefactor = x ** (mu + 1.0) / 4.0 * gamma(0.5 + minus) * gamma(0.5 + plus)
    return prefactor * (leading + zeta_terms)


def masirevic_t22_rhs(m: int, mu: float, x: float) -> complex:
    """Closed form of sum_k s_{mu-3/2,1/2}(kx) / k^(2m+mu-1/2)"""
    pole_term = -math.pi / x * rgamma(2 * m + mu)
    zeta_terms = 0j
    for n in range(m + 1):
        zeta_terms += (-1) ** (n - 1) * riemann_zeta(2 * n) * rgamma(2 * m + mu + 1.0 - 2 * n) * x ** (-2 * n)
    prefactor = 0.5 * (-1) ** (m - 1) * x ** (2 * m + mu - 0.5) * gamma(mu - 1.0)
    return prefactor * (pole_term + 2.0 * zeta_terms)


def masirevic_sum(
    m: int,
    mu: float,
    nu: float,
    x: float,
    ctl: SeriesControl = DEFAULT_SERIES,
    K: int = DEFAULT_TERMS,
    route: EvalRoute = DEFAULT_ROUTE,
) -> MasirevicSum:
    """Both sides of sum_k s_{mu,nu}(kx) / k^(2m+mu+1) = closed form

    Valid for 0 < x < 2 pi and mu > max(-nu-1, nu-2, -1/2); s_{mu,nu} is even in nu.
    """
    m, mu, nu, x = int(m), float(mu), float(nu), float(x)
    if m < 0:
        raise DomainError(f"m must be non-negative, got {m}")
    if not 0.0 < x < 2.0 * math.pi:
        raise DomainError(f"x must lie in (0, 2 pi), got {x:g}")
    if not mu > max(-nu - 1.0, nu - 2.0, -0.5):
        raise DomainError(f"mu = {mu:g} must exceed max(-nu-1, nu-2, -1/2) for nu = {nu:g}")
    rhs = masirevic_t21_rhs(m, mu, nu, x)
    power = 2 * m + mu + 1.0
    if abs(abs(nu) - 0.5) <= 1e-12:
        lhs, used, tail = _half_order_sum(mu, x, power, K, ctl, route)
    else:
        lhs, used, tail = _general_order_sum(mu, abs(nu), x, power, K, ctl)
    logger.debug(f"first sum m={m}, mu={mu:g}, x={x:g}: lhs={lhs}, rhs={rhs}")
    return MasirevicSum(lhs, rhs, used, tail)


def masirevic_sum2(
    m: int,
    mu: float,
    x: float,
    ctl: SeriesControl = DEFAULT_SERIES,
    K: int = DEFAULT_TERMS,
    route: EvalRoute = DEFAULT_ROUTE,
) -> MasirevicSum:
    """Both sides of sum_k s_{mu-3/2,1/2}(kx) / k^(2m+mu-1/2) = closed form

    Valid for 0 <= x <= 2 pi, m >= 1 and mu > 0, except mu = 1 where Gamma(mu-1)
    and the Lommel order both degenerate. At x = 0 both sides vanish when mu > 1/2.
    """
    m, mu, x = int(m), float(mu), float(x)
    if m < 1:
        raise DomainError(f"m must be a positive integer, got {m}")
    if not mu > 0:
        raise DomainError(f"mu must be positive, got {mu:g}")
    if not 0.0 <= x <= 2.0 * math.pi:
        raise DomainError(f"x must lie in [0, 2 pi], got {x:g}")
    if abs(mu - 1.0) < 1e-8:
        raise DomainError("mu = 1 puts Gamma(mu - 1) at its pole")
    if x == 0.0:
        if mu > 0.5:
            return MasirevicSum(0j, 0j, 0, 0.0)
        raise DomainError(f"at x = 0 both sides vanish only for mu > 1/2, got mu = {mu:g}")
    rhs = masirevic_t22_rhs(m, mu, x)
    lhs, used, tail = _half_order_sum(mu - 1.5, x, 2 * m + mu - 0.5, K, ctl, route)
    logger.debug(f"second sum m={m}, mu={mu:g}, x={x:g}: lhs={lhs}, rhs={rhs}")
    return MasirevicSum(lhs, rhs, used, tail)


def masi_closed_form(s: ComplexLike, a: float) -> complex:
    """sum_k s_{-s-1/2,1/2}(2 pi a k) / k^(1/2-s) = -(1/2 a^-s + a^(1-s)/(s-1)) / (2 s sqrt(a) (2 pi)^(s-1/2))"""
    s = to_complex(s, "s")
    a = float(a)
    if s == 0 or s == 1:
        raise DomainError(f"the closed form is singular at s = {s.real:g}")
    log_a = math.log(a)
    explicit = 0.5 * cmath.exp(-s * log_a) + cmath.exp((1.0 - s) * log_a) / (s - 1.0)
    return -explicit / (2.0 * s * math.sqrt(a) * cmath.exp((s - 0.5) * math.log(2.0 * math.pi)))


def a1_closed_form(s: ComplexLike) -> complex:
    """masi_closed_form at a = 1: -(1/2 + 1/(s-1)) / (2 s (2 pi)^(s-1/2))"""
    return masi_closed_form(s, 1.0)


def modilommel_closed_form(s: ComplexLike) -> complex:
    """sum_k s_{-s-5/2,1/2}(2 pi k) / k^(1/2-s)

    1/2 (2 pi)^(1/2-s) Gamma(-s-2) (-1/(2 Gamma(1-s)) + 1/Gamma(2-s) + 1/(12 Gamma(-s)))
    """
    s = to_complex(s, "s")
    bracket = -0.5 * rgamma(1.0 - s) + rgamma(2.0 - s) + rgamma(-s) / 12.0
    return 0.5 * cmath.exp((0.5 - s) * math.log(2.0 * math.pi)) * gamma(-s - 2.0) * bracket


def a1_contiguous_form(s: ComplexLike) -> complex:
    """sum_k s_{-s-1/2,1/2}(2 pi k) / k^(1/2-s) rebuilt from the lower order

    The contiguous relation s_{mu+2,nu} = z^(mu+1) - ((mu+1)^2 - nu^2) s_{mu,nu}
    with mu = -s-5/2 splits the sum into (2 pi)^(-s-3/2) zeta(2) and the
    second closed-form sum at m = 1, mu = -s-1, x = 2 pi. Needs s < -1.
    """
    s = to_complex(s, "s")
    if not (s.imag == 0.0 and s.real < -1.0):
        raise DomainError(f"the contiguous form needs real s < -1, got s = {s}")
    lower = modilommel_closed_form(s)
    first = cmath.exp((-s - 1.5) * math.log(2.0 * math.pi)) * riemann_zeta(2.0)
    return first - ((s + 1.5) ** 2 - 0.25) * lower
