"""Hurwitz zeta function by three independent routes

* Euler-Maclaurin summation, the reference route, valid on the whole plane.
* Hermite's integral, 1/2 a^-s + a^(1-s)/(s-1) + 2 int_0^inf sin(s arctan(x/a)) / ((a^2+x^2)^(s/2) (e^(2 pi x) - 1)) dx.
* Hurwitz's trigonometric series for 0 < a <= 1 and Re(s) < 1.
"""

from __future__ import annotations

import cmath
import logging
import math
from typing import Callable, Optional

import numpy as np

from hurwitzlommel.controls import DEFAULT_QUADRATURE, DEFAULT_SERIES, QuadratureSpec, SeriesControl
from hurwitzlommel.errors import DomainError, PoleError
from hurwitzlommel.kernels.gamma import gamma, rgamma, sinpi, cospi
from hurwitzlommel.kernels.precision import extended_precision, to_double
from hurwitzlommel.kernels.quadrature import (
    ComplexArray,
    FloatArray,
    QuadratureResult,
    exponential_tail,
    integrate_semi_infinite,
)
from hurwitzlommel.kernels.series import polylog_sum
from hurwitzlommel.kernels.values import ComplexLike, on_negative_axis, to_complex

logger = logging.getLogger(__name__)

BERNOULLI_TERMS = 10  # B_2 .. B_20
MIN_SHIFT = 20.0
MAX_DPS = 200


def _check_em_args(s: complex, a: complex) -> None:
    if s == 1:
        raise PoleError("the Hurwitz zeta function has a pole at s = 1")
    if on_negative_axis(a):
        raise DomainError(f"a = {a.real:g} lies on (-inf, 0], where zeta(s, a) is undefined")


def em_shift(s: complex, a: complex) -> int:
    """Number of leading terms summed directly before the Euler-Maclaurin tail"""
    target = max(MIN_SHIFT, abs(s) + 10.0)
    return max(0, int(math.ceil(target - a.real)))


def em_working_dps(s: complex, a: complex, shift: int) -> float:
    growth = max(0.0, 1.0 - s.real) * math.log10(shift + abs(a) + 1.0)
    return min(25.0 + growth + 5.0, MAX_DPS)


def em_corrections(ctx, s, b):  # type: ignore[no-untyped-def]
    """sum_j B_2j/(2j)! (s)_{2j-1} b^(1-s-2j), i.e. zeta(s, b) - b^(1-s)/(s-1) - b^-s/2 for |b| large"""
    total = ctx.mpc(0)
    rising = s  # (s)_{2j-1}
    power = b ** (-s - 1)
    for j in range(1, BERNOULLI_TERMS + 1):
        total += ctx.bernoulli(2 * j) / ctx.factorial(2 * j) * rising * power
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        power /= b * b
    return total


def _em_tail(ctx, s, b):  # type: ignore[no-untyped-def]
    return b ** (1 - s) / (s - 1) + b ** (-s) / 2 + em_corrections(ctx, s, b)


def hurwitz_zeta_em(s: ComplexLike, a: ComplexLike) -> complex:
    """zeta(s, a) by Euler-Maclaurin summation with extended-precision accumulation"""
    s = to_complex(s, "s")
    a = to_complex(a, "a")
    _check_em_args(s, a)
    shift = em_shift(s, a)
    with extended_precision(em_working_dps(s, a, shift)) as ctx:
        ss = ctx.mpc(s)
        aa = ctx.mpc(a)
        head = ctx.fsum((n + aa) ** (-ss) for n in range(shift))
        value = head + _em_tail(ctx, ss, shift + aa)
        return to_double(value)


def phi_em(s: ComplexLike, x: ComplexLike) -> complex:
    """zeta(s, x) - 1/2 x^-s - x^(1-s)/(s-1), with the explicit terms cancelled in extended precision"""
    s = to_complex(s, "s")
    x = to_complex(x, "x")
    _check_em_args(s, x)
    shift = em_shift(s, x)
    with extended_precision(em_working_dps(s, x, shift) + 5) as ctx:
        ss = ctx.mpc(s)
        xx = ctx.mpc(x)
        if shift == 0:
            return to_double(em_corrections(ctx, ss, xx))
        head = ctx.fsum((n + xx) ** (-ss) for n in range(shift))
        value = head + _em_tail(ctx, ss, shift + xx) - xx ** (-ss) / 2 - xx ** (1 - ss) / (ss - 1)
        return to_double(value)


def hermite_integrand(s: complex, a: complex) -> Callable[[FloatArray], ComplexArray]:
    """Vectorised sin(s theta) (a^2+x^2)^(-s/2) / (e^(2 pi x) - 1), its x -> 0 limit hard-coded"""
    log_a = cmath.log(a)
    limit = s / (2.0 * math.pi) * cmath.exp(-(s + 1.0) * log_a)

    def f(x: FloatArray) -> ComplexArray:
        ratio = x / a
        theta = np.arctan(ratio)
        # a^2 + x^2 = a^2 (1 + (x/a)^2) stays off the cut for Re(a) > 0
        log_r = log_a + 0.5 * np.log1p(ratio * ratio)
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            denom = np.expm1(2.0 * np.pi * x)
            values = np.sin(s * theta) * np.exp(-s * log_r) / denom
        return np.where(x == 0.0, limit, values)

    return f


def arctan_kernel_tail(s: complex, a: complex, decay: float) -> Callable[[float], float]:
    """Tail bound for sin(s arctan(x/a)) (a^2+x^2)^(-s/2) against e^(-decay x)"""
    log_a = cmath.log(a)

    def envelope(x: float) -> float:
        ratio = x / a
        theta = cmath.atan(ratio)
        spread = max(abs((s * theta).imag), abs(s.imag) * 0.5 * math.pi)
        log_r = log_a + 0.5 * cmath.log(1.0 + ratio * ratio)
        return 2.0 * math.exp(spread - (s * log_r).real - decay * x)

    return exponential_tail(envelope, decay, growth=max(0.0, -s.real))


def hermite_quadrature(s: complex, a: complex, quad: QuadratureSpec) -> QuadratureResult:
    """The integral in Hermite's formula, without its factor 2"""
    two_pi = 2.0 * math.pi
    return integrate_semi_infinite(
        hermite_integrand(s, a),
        decay=two_pi,
        singularity_distance=min(a.real, 1.0),
        tail_bound=arctan_kernel_tail(s, a, two_pi),
        spec=quad,
    )


def hurwitz_zeta_hermite(
    s: ComplexLike, a: ComplexLike, quad: QuadratureSpec = DEFAULT_QUADRATURE
) -> complex:
    """zeta(s, a) from Hermite's integral, Re(a) > 0"""
    s = to_complex(s, "s")
    a = to_complex(a, "a")
    if s == 1:
        raise PoleError("the Hurwitz zeta function has a pole at s = 1")
    if a.real <= 0:
        raise DomainError(f"Hermite's formula needs Re(a) > 0, got a = {a}")
    result = hermite_quadrature(s, a, quad)
    explicit = 0.5 * cmath.exp(-s * cmath.log(a)) + cmath.exp((1.0 - s) * cmath.log(a)) / (s - 1.0)
    return explicit + 2.0 * result.value


def fourier_validity(s: complex, a: float) -> Optional[str]:
    """Reason the trigonometric expansion does not apply, or None"""
    if not 0.0 < a <= 1.0:
        return f"a must lie in (0, 1], got a = {a:g}"
    if a == 1.0 and not s.real < 0.0:
        return f"a = 1 needs Re(s) < 0, got Re(s) = {s.real:g}"
    if not s.real < 1.0:
        return f"the expansion needs Re(s) < 1, got Re(s) = {s.real:g}"
    return None


def fourier_sums(s: complex, a: float, ctl: SeriesControl) -> tuple[complex, complex]:
    """sum cos(2 pi n a)/n^(1-s) and sum sin(2 pi n a)/n^(1-s)"""
    w = 1.0 - s
    if a == 1.0:
        from hurwitzlommel.zeta.riemann import riemann_zeta

        return riemann_zeta(w), 0j
    z = cmath.exp(2j * math.pi * a)
    forward = polylog_sum(z, w, ctl).value
    backward = polylog_sum(z.conjugate(), w, ctl).value
    return 0.5 * (forward + backward), (forward - backward) / 2j


def hurwitz_rhs_fourier(s: ComplexLike, a: float, ctl: SeriesControl = DEFAULT_SERIES) -> complex:
    """Right-hand side of Hurwitz's formula

    2 Gamma(1-s) (2 pi)^(s-1) [sin(pi s/2) sum cos(2 pi n a)/n^(1-s) + cos(pi s/2) sum sin(2 pi n a)/n^(1-s)]
    """
    s = to_complex(s, "s")
    a = float(a)
    reason = fourier_validity(s, a)
    if reason is not None:
        raise DomainError(reason)
    cos_sum, sin_sum = fourier_sums(s, a, ctl)
    prefactor = 2.0 * gamma(1.0 - s) * cmath.exp((s - 1.0) * math.log(2.0 * math.pi))
    return prefactor * (sinpi(s / 2.0) * cos_sum + cospi(s / 2.0) * sin_sum)


def hurwitz_from_befmas_closed(s: ComplexLike, a: float, ctl: SeriesControl = DEFAULT_SERIES) -> complex:
    """(2 pi)^s / (Gamma(s) sin(pi s)) sum_k sin(pi (4ak + s)/2) / k^(1-s), for Re(s) < 0

    The same trigonometric series as Hurwitz's formula, reached from the
    Lommel expansion of zeta(s, a) with the reflection formula folded in.
    """
    s = to_complex(s, "s")
    a = float(a)
    if not s.real < 0.0:
        raise DomainError(f"the closed form needs Re(s) < 0, got Re(s) = {s.real:g}")
    sine = sinpi(s)
    if sine == 0:
        raise PoleError(f"sin(pi s) vanishes at s = {s}")
    reason = fourier_validity(s, a)
    if reason is not None:
        raise DomainError(reason)
    cos_sum, sin_sum = fourier_sums(s, a, ctl)
    # sin(2 pi a k + pi s/2) = sin(pi s/2) cos(2 pi a k) + cos(pi s/2) sin(2 pi a k)
    series = sinpi(s / 2.0) * cos_sum + cospi(s / 2.0) * sin_sum
    return cmath.exp(s * math.log(2.0 * math.pi)) * rgamma(s) / sine * series
