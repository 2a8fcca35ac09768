"""Lommel functions s_{mu,nu}, S_{mu,nu} and the special order S_{-s-1/2,1/2}

For the special order the ascending definition collapses to

    S_{-s-1/2,1/2}(z) = z^(1/2-s) / (s(s-1)) 1F2(1; 1-s/2, (3-s)/2; -z^2/4) - Gamma(-s) sin(z + pi s/2) / sqrt(z)

which degenerates at s = 0, 1, 2, ... The integral representation

    S_{-s-1/2,1/2}(z) = a^(-s-1/2) (2 pi)^(1/2-s) int_0^inf e^(-2 pi x) [sin(s theta)/s] (1 + (x/a)^2)^(-s/2) dx,

with a = z/(2 pi) and theta = arctan(x/a), is entire in s and is used for large z
and near those points.
"""

from __future__ import annotations

import cmath
import logging
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from hurwitzlommel.controls import (
    DEFAULT_QUADRATURE,
    DEFAULT_ROUTE,
    DEFAULT_SERIES,
    EvalRoute,
    QuadratureSpec,
    Route,
    SeriesControl,
)
from hurwitzlommel.errors import (
    BranchError,
    CancellationError,
    DegenerateOrder,
    DomainError,
    PoleError,
)
from hurwitzlommel.kernels.bessel import bessel_j
from hurwitzlommel.kernels.gamma import cospi, gamma, sinpi
from hurwitzlommel.kernels.hypergeometric import SeriesResult, hyp1f2
from hurwitzlommel.kernels.quadrature import (
    ComplexArray,
    FloatArray,
    QuadratureResult,
    exponential_tail,
    integrate_semi_infinite,
)
from hurwitzlommel.kernels.values import (
    DEGENERACY_TOL,
    ComplexLike,
    is_nonpositive_integer,
    near_integer,
    on_negative_axis,
    to_complex,
)

logger = logging.getLogger(__name__)

#: digits the 1F2 factor may lose before the series route is rejected
CANCELLATION_BUDGET = 12.0
#: distance from s = 0, 1, 2, ... inside which AUTO prefers the integral route
REMOVABLE_RADIUS = 1e-3


@dataclass(frozen=True)
class LommelOrder:
    """Orders (mu, nu) of a Lommel function"""

    mu: complex
    nu: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", to_complex(self.mu, "mu"))
        object.__setattr__(self, "nu", to_complex(self.nu, "nu"))

    @classmethod
    def special(cls, s: ComplexLike) -> LommelOrder:
        """The order (-s-1/2, 1/2)"""
        return cls(-to_complex(s, "s") - 0.5, 0.5)

    @property
    def is_half_order(self) -> bool:
        return abs(self.nu) == 0.5 and self.nu.imag == 0.0


OrderLike = Union[LommelOrder, tuple[ComplexLike, ComplexLike]]


def _as_order(order: OrderLike) -> LommelOrder:
    if isinstance(order, LommelOrder):
        return order
    mu, nu = order
    return LommelOrder(complex(mu), complex(nu))


def _check_argument(z: complex) -> None:
    if on_negative_axis(z):
        raise BranchError(f"z = {z.real:g} lies on the branch cut (-inf, 0]")


def _power(z: complex, p: complex) -> complex:
    return cmath.exp(p * cmath.log(z))


def _at_gamma_pole(g: complex) -> bool:
    return near_integer(g) and g.real < 0.5


def lommel_s_series(
    order: OrderLike, z: ComplexLike, ctl: SeriesControl = DEFAULT_SERIES
) -> tuple[complex, SeriesResult]:
    """s_{mu,nu}(z) together with the 1F2 diagnostics, no cancellation budget applied"""
    order = _as_order(order)
    z = to_complex(z, "z")
    _check_argument(z)
    mu, nu = order.mu, order.nu
    d_minus = mu - nu + 1.0
    d_plus = mu + nu + 1.0
    if abs(d_minus) < DEGENERACY_TOL or abs(d_plus) < DEGENERACY_TOL:
        raise DegenerateOrder(f"(mu - nu + 1)(mu + nu + 1) vanishes for mu = {mu}, nu = {nu}")
    b1 = (mu - nu + 3.0) / 2.0
    b2 = (mu + nu + 3.0) / 2.0
    if _at_gamma_pole(b1) or _at_gamma_pole(b2):
        raise DegenerateOrder(f"1F2 lower parameter is a non-positive integer for mu = {mu}, nu = {nu}")
    series = hyp1f2(1.0, b1, b2, -z * z / 4.0, ctl)
    return _power(z, mu + 1.0) / (d_minus * d_plus) * series.value, series


def lommel_s_small(
    order: OrderLike,
    z: ComplexLike,
    ctl: SeriesControl = DEFAULT_SERIES,
    budget: float = CANCELLATION_BUDGET,
) -> complex:
    """s_{mu,nu}(z) from its 1F2 definition

    Raises CancellationError when the 1F2 summation loses more than ``budget``
    digits, which happens for large |z|.
    """
    value, series = lommel_s_series(order, z, ctl)
    if series.cancellation_estimate > budget:
        raise CancellationError(
            f"1F2 factor of s_mu,nu lost {series.cancellation_estimate:.1f} digits at z = {z}",
            series.cancellation_estimate,
        )
    return value


def bessel_part(order: OrderLike, z: ComplexLike, ctl: SeriesControl = DEFAULT_SERIES) -> complex:
    """S_{mu,nu}(z) - s_{mu,nu}(z) for non-integer nu"""
    order = _as_order(order)
    z = to_complex(z, "z")
    mu, nu = order.mu, order.nu
    if near_integer(nu):
        raise DegenerateOrder(f"the J_(+-nu) form of S_mu,nu needs non-integer nu, got {nu}")
    g1 = (mu - nu + 1.0) / 2.0
    g2 = (mu + nu + 1.0) / 2.0
    if _at_gamma_pole(g1) or _at_gamma_pole(g2):
        raise PoleError(f"Gamma((mu -+ nu + 1)/2) has a pole for mu = {mu}, nu = {nu}")
    factor = _power(2.0, mu - 1.0) * gamma(g1) * gamma(g2) / sinpi(nu)
    combination = cospi((mu - nu) / 2.0) * bessel_j(-nu, z, ctl) - cospi((mu + nu) / 2.0) * bessel_j(nu, z, ctl)
    return factor * combination


def _special_bessel_part(s: complex, z: complex) -> complex:
    # 2^(mu-1) Gamma(-s/2) Gamma((1-s)/2) {...} collapsed with the duplication formula
    return -gamma(-s) * cmath.sin(z + 0.5 * math.pi * s) / cmath.sqrt(z)


def lommel_S(
    order: OrderLike,
    z: ComplexLike,
    ctl: SeriesControl = DEFAULT_SERIES,
    route: EvalRoute = DEFAULT_ROUTE,
) -> complex:
    """S_{mu,nu}(z) for non-integer nu

    Half orders whose ascending form degenerates, or whose 1F2 factor cancels
    beyond the budget, are delegated to the special-order integral route.
    """
    order = _as_order(order)
    z = to_complex(z, "z")
    _check_argument(z)
    if order.is_half_order:
        s = -order.mu - 0.5
        try:
            return lommel_s_small(order, z, ctl) + bessel_part(order, z, ctl)
        except (DegenerateOrder, PoleError, CancellationError) as exc:
            if z.imag != 0.0 or z.real <= 0:
                raise
            logger.debug(f"S_(mu,1/2)({z}) with mu={order.mu}: {exc}; using the integral route")
            return lommel_S_special(s, z.real, EvalRoute(Route.INTEGRAL_LARGE_Z, route.switch_radius))
    return lommel_s_small(order, z, ctl) + bessel_part(order, z, ctl)


def lommel_s(
    order: OrderLike,
    z: ComplexLike,
    ctl: SeriesControl = DEFAULT_SERIES,
    route: EvalRoute = DEFAULT_ROUTE,
) -> complex:
    """s_{mu,nu}(z) at any positive argument

    Half orders at large z are obtained as S_{mu,nu} minus its closed-form Bessel
    part, avoiding the cancelling 1F2 series.
    """
    order = _as_order(order)
    z = to_complex(z, "z")
    try:
        return lommel_s_small(order, z, ctl)
    except CancellationError:
        if not order.is_half_order or z.imag != 0.0:
            raise
    s = -order.mu - 0.5
    full = lommel_S_special(s, z.real, EvalRoute(Route.INTEGRAL_LARGE_Z, route.switch_radius))
    return full - _special_bessel_part(s, z)


def _series_degenerates(s: complex) -> bool:
    return round(s.real) >= 0 and near_integer(s, DEGENERACY_TOL)


def special_series(s: complex, z: float, ctl: SeriesControl = DEFAULT_SERIES) -> tuple[complex, SeriesResult]:
    """Ascending form of S_{-s-1/2,1/2}(z) with its 1F2 diagnostics"""
    nearest = round(s.real)
    if _series_degenerates(s):
        raise DegenerateOrder(f"the ascending form of S_(-s-1/2,1/2) degenerates at s = {nearest}")
    series = hyp1f2(1.0, 1.0 - s / 2.0, (3.0 - s) / 2.0, -z * z / 4.0, ctl)
    head = _power(z, 0.5 - s) / (s * (s - 1.0)) * series.value
    return head + _special_bessel_part(s, z), series


def special_integrand(s: complex, a: float, decay: float = 2.0 * math.pi) -> Callable[[FloatArray], ComplexArray]:
    """e^(-decay x) [sin(s theta)/s] (1 + (x/a)^2)^(-s/2), with theta in place of sin(s theta)/s at s = 0"""

    def f(x: FloatArray) -> ComplexArray:
        ratio = x / a
        theta = np.arctan(ratio)
        kernel = theta if s == 0 else np.sin(s * theta) / s
        return kernel * np.exp(-0.5 * s * np.log1p(ratio * ratio) - decay * x)

    return f


def special_tail(s: complex, a: float, decay: float = 2.0 * math.pi) -> Callable[[float], float]:
    # |sin(w)/s| <= |theta| e^|Im w| with w = s theta, theta in [0, pi/2)
    spread = 0.5 * math.pi * math.exp(abs(s.imag) * 0.5 * math.pi)

    def envelope(x: float) -> float:
        return spread * math.exp(-0.5 * s.real * math.log1p((x / a) ** 2) - decay * x)

    return exponential_tail(envelope, decay, growth=max(0.0, -s.real))


def special_integral(s: complex, z: float, quad: QuadratureSpec = DEFAULT_QUADRATURE) -> tuple[complex, QuadratureResult]:
    """Integral route for S_{-s-1/2,1/2}(z), entire in s"""
    a = z / (2.0 * math.pi)
    result = integrate_semi_infinite(
        special_integrand(s, a),
        decay=2.0 * math.pi,
        singularity_distance=a,
        tail_bound=special_tail(s, a),
        spec=quad,
    )
    prefactor = cmath.exp(-(s + 0.5) * math.log(a) + (0.5 - s) * math.log(2.0 * math.pi))
    return prefactor * result.value, result


def choose_route(s: complex, z: float, route: EvalRoute) -> Route:
    if route.route is not Route.AUTO:
        return route.route
    if z > route.switch_radius:
        return Route.INTEGRAL_LARGE_Z
    if round(s.real) >= 0 and abs(s - round(s.real)) < REMOVABLE_RADIUS:
        return Route.INTEGRAL_LARGE_Z
    return Route.SERIES_SMALL_Z


def lommel_S_special(
    s: ComplexLike,
    z: float,
    route: EvalRoute = DEFAULT_ROUTE,
    ctl: SeriesControl = DEFAULT_SERIES,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> complex:
    """S_{-s-1/2,1/2}(z) for every complex s and z > 0"""
    s = to_complex(s, "s")
    z = float(z)
    if not z > 0:
        raise DomainError(f"S_(-s-1/2,1/2)(z) is evaluated for z > 0 only, got z = {z:g}")
    chosen = choose_route(s, z, route)
    if chosen is Route.SERIES_SMALL_Z and _series_degenerates(s):
        warnings.warn(
            f"the series route degenerates at s = {s}; using the integral route", UserWarning, stacklevel=2
        )
        chosen = Route.INTEGRAL_LARGE_Z
    logger.debug(f"S_special(s={s}, z={z:g}) via {chosen.value}")
    if chosen is Route.INTEGRAL_LARGE_Z:
        return special_integral(s, z, quad)[0]
    value, series = special_series(s, z, ctl)
    if series.cancellation_estimate > CANCELLATION_BUDGET:
        # the 1F2 factor vanishes at some points where S itself does not
        if route.route is Route.AUTO:
            logger.debug(
                f"S_special(s={s}, z={z:g}) lost {series.cancellation_estimate:.1f} digits; using the integral route"
            )
            return special_integral(s, z, quad)[0]
        raise CancellationError(
            f"series route for S_(-s-1/2,1/2) lost {series.cancellation_estimate:.1f} digits at z = {z:g}",
            series.cancellation_estimate,
        )
    return value


def lommel_C(s: ComplexLike, z: float, route: EvalRoute = DEFAULT_ROUTE) -> complex:
    """C_s(z) = sqrt(z) Gamma(2s+1) S_{-2s-1/2,1/2}(z)"""
    s = to_complex(s, "s")
    z = float(z)
    if is_nonpositive_integer(2.0 * s + 1.0):
        raise PoleError(f"Gamma(2s+1) has a pole at s = {s}")
    return math.sqrt(z) * gamma(2.0 * s + 1.0) * lommel_S_special(2.0 * s, z, route)


def contiguous_step(mu: ComplexLike, nu: ComplexLike, z: ComplexLike, ctl: SeriesControl = DEFAULT_SERIES) -> complex:
    """s_{mu+2,nu}(z) = z^(mu+1) - ((mu+1)^2 - nu^2) s_{mu,nu}(z)"""
    mu = to_complex(mu, "mu")
    nu = to_complex(nu, "nu")
    z = to_complex(z, "z")
    lower = lommel_s(LommelOrder(mu, nu), z, ctl)
    return _power(z, mu + 1.0) - ((mu + 1.0) ** 2 - nu * nu) * lower


def lommel_S_asymptotic(mu: ComplexLike, nu: ComplexLike, z: ComplexLike, terms: int) -> complex:
    """z^(mu-1) sum_{j<terms} (-1)^j prod_{i<=j} ((mu-2i+1)^2 - nu^2) z^(-2j), the large-z expansion of S_{mu,nu}"""
    mu = to_complex(mu, "mu")
    nu = to_complex(nu, "nu")
    z = to_complex(z, "z")
    _check_argument(z)
    total = 0j
    coefficient = 1.0 + 0j
    inv_z2 = 1.0 / (z * z)
    power = 1.0 + 0j
    for j in range(terms):
        total += coefficient * power
        i = j + 1
        coefficient *= -((mu - 2 * i + 1.0) ** 2 - nu * nu)
        power *= inv_z2
    return _power(z, mu - 1.0) * total


def special_asymptotic_coefficients(s: complex, terms: int) -> list[complex]:
    """(-1)^j (s+1)_{2j} for j < terms, the special-order expansion coefficients"""
    coefficients = []
    value = 1.0 + 0j
    for j in range(terms):
        coefficients.append(value)
        value *= -(s + 2 * j + 1.0) * (s + 2 * j + 2.0)
    return coefficients
