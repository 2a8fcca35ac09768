"""The Mellin-Barnes integral

    I_s(z) = 1/(2 pi i) int_(c) Gamma((1+xi)/2) Gamma((1-xi)/2) Gamma(s+xi) z^(-xi) dxi

by quadrature along a vertical line, by its residue expansion and in closed form.

Gamma((1+xi)/2) Gamma((1-xi)/2) = pi / cos(pi xi/2). The contour separates the poles
of Gamma(s+xi) at xi = -s-n from those of Gamma((1-xi)/2) at xi = 1, 3, 5, ...
When no straight line does (Re s <= -1), the line is moved right of -Re(s) and the
residues of the odd poles it crosses are subtracted.
"""

from __future__ import annotations

import cmath
import logging
import math
from typing import Callable, NamedTuple, Optional

import numpy as np

from hurwitzlommel.controls import DEFAULT_CONTOUR, DEFAULT_SERIES, ContourSpec, SeriesControl
from hurwitzlommel.errors import (
    BranchError,
    CancellationError,
    ContourError,
    DomainError,
    DoublePoleProximity,
    NoConvergence,
    PoleError,
    TailBoundExceeded,
)
from hurwitzlommel.kernels.gamma import cospi, gamma, log_gamma_array, rgamma, sinpi
from hurwitzlommel.kernels.hypergeometric import SeriesResult, hyp1f2
from hurwitzlommel.kernels.quadrature import ComplexArray, FloatArray, integrate_interval
from hurwitzlommel.kernels.values import ComplexLike, near_integer, on_negative_axis, to_complex

logger = logging.getLogger(__name__)

#: distance from an integer s inside which poles of the integrand coalesce
POLE_PROXIMITY = 1e-6
#: digits the 1F2 factor of the closed form may lose
CLOSED_FORM_BUDGET = 10.0
#: minimal gap between the contour and the nearest pole
MIN_GAP = 0.25

LogIntegrand = Callable[[np.ndarray], np.ndarray]


class LineIntegral(NamedTuple):
    value: complex
    nodes_used: int
    c: float
    t_max: float
    tail_bound: float


def stirling_tail(constant: float, power: float, rate: float, t: float) -> float:
    """Bound on int_t^inf constant u^power e^(-rate u) du, valid for t > max(power, 0)/rate"""
    margin = rate - max(power, 0.0) / t
    if margin <= 0:
        return math.inf
    return constant * math.exp(power * math.log(t) - rate * t) / margin


def stirling_cutoff(constant: float, power: float, rate: float, tol: float, start: float = 1.0) -> tuple[float, float]:
    """Smallest practical T with int_T^inf constant t^power e^(-rate t) dt <= tol

    Fixed-point iteration on T = (log(constant/(rate tol)) + power log T)/rate,
    starting past the maximum of the envelope. Returns (T, bound at T).
    """
    t = max(start, 1.0, 2.0 * max(power, 0.0) / rate + 1.0)
    for _ in range(60):
        if stirling_tail(constant, power, rate, t) <= tol:
            break
        target = (math.log(constant / (0.5 * rate * tol)) + power * math.log(t)) / rate
        t = max(t * 1.05, target)
    return t, stirling_tail(constant, power, rate, t)


def log_pi_sec(xi: np.ndarray) -> np.ndarray:
    """log(pi / cos(pi xi / 2)) without overflow far from the real axis"""
    w = 0.5 * np.pi * xi
    # cos is even, so evaluate at the image with Im >= 0 where e^(iv) is small
    v = np.where(w.imag >= 0.0, w, -w)
    return np.log(2.0 * np.pi) + 1j * v - np.log1p(np.exp(2j * v))


def line_integral(
    log_integrand: LogIntegrand,
    c: float,
    t_max: float,
    nodes: int,
    max_width: float,
) -> tuple[complex, int]:
    """1/(2 pi) int_{-t_max}^{t_max} f(c + it) dt, f given through its logarithm"""

    def f(t: FloatArray) -> ComplexArray:
        xi = c + 1j * np.asarray(t, dtype=np.float64)
        return np.exp(log_integrand(xi))

    value, used = integrate_interval(f, -t_max, t_max, max_width=max_width, nodes=nodes)
    return value / (2.0 * math.pi), used


def _check_argument(z: complex) -> None:
    if on_negative_axis(z):
        raise BranchError(f"z = {z.real:g} lies on the branch cut (-inf, 0]")


def _check_poles(s: complex) -> None:
    nearest = round(s.real)
    if nearest <= -1 and abs(s - nearest) < POLE_PROXIMITY:
        raise DoublePoleProximity(f"poles of Gamma(s + xi) and of the cosine factor coalesce at s = {nearest}")


def _odd_distance(c: float) -> float:
    """Distance from c to the nearest odd integer"""
    r = (c - 1.0) % 2.0
    return min(r, 2.0 - r)


def default_abscissa(s: complex) -> float:
    """Midpoint of the fundamental strip, or a point right of -Re(s) when the strip is narrow"""
    lo = max(-1.0, -s.real)
    if 1.0 - lo >= 2.0 * MIN_GAP:
        return 0.5 * (lo + 1.0)
    c = -s.real + 0.5
    if _odd_distance(c) < MIN_GAP:
        c += 0.5
    return c


def _crossed_odd_poles(c: float) -> range:
    """j with 2j + 1 < c"""
    return range(max(0, int(math.ceil((c - 1.0) / 2.0))))


def i_s_line_result(s: ComplexLike, z: ComplexLike, contour: ContourSpec = DEFAULT_CONTOUR) -> LineIntegral:
    """I_s(z) along Re(xi) = c with a Stirling tail bound

    For |t| past the start point the integrand is below
    2 pi sqrt(2 pi) |t + Im s|^(Re s + c - 1/2) e^(-pi|t|/2 - pi|t + Im s|/2 + |arg z||t|) |z|^(-c)
    up to a factor 2; t_max is the smallest value that pushes both discarded tails
    below ``contour.tol``.
    """
    s = to_complex(s, "s")
    z = to_complex(z, "z")
    _check_argument(z)
    _check_poles(s)
    c = default_abscissa(s) if contour.c is None else float(contour.c)
    if not c > max(-1.0, -s.real):
        raise ContourError(f"abscissa c = {c:g} must exceed max(-1, -Re s) = {max(-1.0, -s.real):g}")
    if _odd_distance(c) < POLE_PROXIMITY:
        raise ContourError(f"abscissa c = {c:g} passes through a pole of the cosine factor")

    log_z = cmath.log(z)
    rate = math.pi - abs(log_z.imag)
    power = s.real + c - 0.5
    shift = abs(s.imag)
    # beyond start, |t + Im s| lies in [t/2, 3t/2] and Stirling's relative error is below 1
    start = 2.0 * shift + 1.0 + (s.real + c) ** 2
    spread = max(2.0 ** (-power), 1.5**power)
    # two tails, the 1/(2 pi) of the line measure and the Stirling safety factor 2
    constant = 2.0 * 2.0 * math.sqrt(2.0 * math.pi) * math.exp(0.5 * math.pi * shift) * abs(z) ** (-c) * spread
    if contour.t_max is None:
        t_max, tail = stirling_cutoff(constant, power, rate, contour.tol, start)
    else:
        t_max = float(contour.t_max)
        tail = stirling_tail(constant, power, rate, t_max) if t_max >= start else math.inf
        if tail > contour.tol:
            raise TailBoundExceeded(f"t_max = {t_max:g} leaves a tail bound of {tail:.3g} above tol = {contour.tol:g}")

    def log_integrand(xi: np.ndarray) -> np.ndarray:
        return log_pi_sec(xi) + log_gamma_array(s + xi) - xi * log_z

    gap = min(_odd_distance(c), c + s.real)
    value, used = line_integral(log_integrand, c, t_max, contour.nodes, min(1.0, 2.0 * gap))
    for j in _crossed_odd_poles(c):
        value -= -2.0 * (-1) ** j * gamma(s + 2 * j + 1.0) * cmath.exp(-(2 * j + 1) * log_z)
    logger.debug(f"I_s line at s={s}, z={z}: c={c:g}, t_max={t_max:.4g}, nodes={used}, tail<={tail:.3g}")
    return LineIntegral(value, used, c, t_max, tail)


def i_s_line(s: ComplexLike, z: ComplexLike, contour: ContourSpec = DEFAULT_CONTOUR) -> complex:
    return i_s_line_result(s, z, contour).value


def residue_expansion(
    s: ComplexLike, z: ComplexLike, n_terms: int = 400, ctl: SeriesControl = DEFAULT_SERIES
) -> SeriesResult:
    """pi z^s sum_m (-z)^m / (m! cos(pi(m+s)/2)) + 2z sum_n (-1)^n z^(2n) Gamma(s-1-2n)

    ``cancellation_estimate`` is log10 of the largest term over the final magnitude.
    """
    s = to_complex(s, "s")
    z = to_complex(z, "z")
    _check_argument(z)
    if not s.real < 0:
        raise DomainError(f"the residue expansion needs Re(s) < 0, got Re(s) = {s.real:g}")
    if near_integer(s, POLE_PROXIMITY):
        raise DoublePoleProximity(f"a cosine factor of the residue expansion vanishes near s = {round(s.real)}")

    z_s = cmath.exp(s * cmath.log(z))
    first = 0j
    power = 1.0 + 0j
    peak = 0.0
    small_run = 0
    used_first = 0
    for m in range(n_terms):
        term = math.pi * z_s * power / cospi((m + s) / 2.0)
        first += term
        peak = max(peak, abs(term))
        used_first = m + 1
        if abs(term) <= ctl.rel_tol * abs(first) and m > abs(z):
            small_run += 1
            if small_run >= ctl.consecutive_small:
                break
        else:
            small_run = 0
        power *= -z / (m + 1)
    else:
        raise NoConvergence(f"first residue sum did not settle within {n_terms} terms at z = {z}")

    second = 0j
    g = gamma(s - 1.0)
    z2 = z * z
    power = 2.0 * z
    small_run = 0
    used_second = 0
    for n in range(n_terms):
        term = power * g
        second += term
        peak = max(peak, abs(term))
        used_second = n + 1
        if abs(term) <= ctl.rel_tol * abs(second) and n > abs(z):
            small_run += 1
            if small_run >= ctl.consecutive_small:
                break
        else:
            small_run = 0
        # Gamma(s-3-2n) = Gamma(s-1-2n) / ((s-2-2n)(s-3-2n))
        g /= (s - 2.0 - 2 * n) * (s - 3.0 - 2 * n)
        power *= -z2
    else:
        raise NoConvergence(f"second residue sum did not settle within {n_terms} terms at z = {z}")

    total = first + second
    digits = math.log10(max(peak, 1e-300) / max(abs(total), 1e-300))
    return SeriesResult(total, used_first + used_second, max(digits, 0.0))


def i_s_residue(s: ComplexLike, z: ComplexLike, n_terms: int = 400) -> complex:
    return residue_expansion(s, z, n_terms).value


def i_s_closed(s: ComplexLike, z: ComplexLike, ctl: SeriesControl = DEFAULT_SERIES) -> complex:
    """2 pi z^s sin(z + pi s/2) / sin(pi s) + 2 z Gamma(s-1) 1F2(1; 1-s/2, (3-s)/2; -z^2/4)

    At z = 2 pi a k this is the form with sin(pi(4ak + s)/2) and 1F2 at -a^2 pi^2 k^2.
    """
    s = to_complex(s, "s")
    z = to_complex(z, "z")
    _check_argument(z)
    if near_integer(s, POLE_PROXIMITY):
        raise PoleError(f"sin(pi s) and Gamma(s-1) are singular near s = {round(s.real)}")
    series = hyp1f2(1.0, 1.0 - s / 2.0, (3.0 - s) / 2.0, -z * z / 4.0, ctl)
    if series.cancellation_estimate > CLOSED_FORM_BUDGET:
        raise CancellationError(
            f"1F2 factor of the closed form lost {series.cancellation_estimate:.1f} digits at z = {z}",
            series.cancellation_estimate,
        )
    trig = 2.0 * math.pi * cmath.exp(s * cmath.log(z)) * cmath.sin(z + 0.5 * math.pi * s) / sinpi(s)
    return trig + 2.0 * z * gamma(s - 1.0) * series.value


def inter_reassembly(
    s: ComplexLike, a: float, k: int, contour: ContourSpec = DEFAULT_CONTOUR, use_closed: Optional[bool] = None
) -> complex:
    """a^-s / (4 pi k Gamma(s)) I_s(2 pi a k), the Lemma integral rebuilt from I_s

    ``use_closed`` forces one route. By default the closed form is tried away from
    integer s and the line integral takes over when its 1F2 factor cancels.
    """
    s = to_complex(s, "s")
    a = float(a)
    if not a > 0 or k < 1:
        raise DomainError(f"need a > 0 and k >= 1, got a = {a:g}, k = {k}")
    if s == 0:
        return 0j
    z = 2.0 * math.pi * a * k
    if use_closed is None:
        try:
            i_s = i_s_closed(s, z) if not near_integer(s, 1e-3) else i_s_line(s, z, contour)
        except CancellationError as exc:
            logger.debug(f"closed form of I_s rejected ({exc}); using the line integral")
            i_s = i_s_line(s, z, contour)
    else:
        i_s = i_s_closed(s, z) if use_closed else i_s_line(s, z, contour)
    return cmath.exp(-s * math.log(a)) * rgamma(s) / (4.0 * math.pi * k) * i_s
