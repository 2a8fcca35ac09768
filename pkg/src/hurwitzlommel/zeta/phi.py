"""phi(s, x) = zeta(s, x) - 1/2 x^-s + x^(1-s)/(1-s) and its lattice sums"""

from __future__ import annotations

import logging
import math
from enum import Enum
from typing import NamedTuple, Union

from hurwitzlommel.controls import DEFAULT_QUADRATURE, QuadratureSpec
from hurwitzlommel.errors import DomainError, PoleError
from hurwitzlommel.kernels.precision import extended_precision, to_double
from hurwitzlommel.kernels.values import ComplexLike, to_complex
from hurwitzlommel.zeta.hurwitz import (
    em_shift,
    em_working_dps,
    hermite_quadrature,
    hurwitz_zeta_em,
    phi_em,
)

logger = logging.getLogger(__name__)

LATTICE_TAIL_START = 25.0


class PhiRoute(str, Enum):
    EULER_MACLAURIN = "euler_maclaurin"
    HERMITE = "hermite"


class LatticeSum(NamedTuple):
    value: complex
    terms_used: int
    tail: complex


def phi(
    s: ComplexLike,
    x: float,
    route: Union[PhiRoute, str] = PhiRoute.EULER_MACLAURIN,
    quad: QuadratureSpec = DEFAULT_QUADRATURE,
) -> complex:
    """phi(s, x) for real x > 0

    Both explicit terms of Hermite's formula cancel in phi, so the Hermite route
    returns twice the integral alone.
    """
    s = to_complex(s, "s")
    x = float(x)
    if not x > 0:
        raise DomainError(f"phi needs x > 0, got x = {x:g}")
    if s == 1:
        raise PoleError("phi(s, x) inherits the pole of zeta(s, x) at s = 1")
    if PhiRoute(route) is PhiRoute.HERMITE:
        return 2.0 * hermite_quadrature(s, complex(x), quad).value
    return phi_em(s, x)


def phi_lattice_sum(s: ComplexLike, alpha: float, n_terms: int = 0) -> LatticeSum:
    """sum_{n>=1} phi(s, n alpha) for Re(s) > 0

    Terms with n alpha below the asymptotic threshold (or the first ``n_terms``,
    whichever is larger) are summed one by one. Beyond that, phi(s, y) equals its
    Bernoulli expansion sum_j B_2j/(2j)! (s)_{2j-1} y^(1-s-2j), whose sum over n
    is a finite combination of zeta(s + 2j - 1, N + 1).
    """
    s = to_complex(s, "s")
    alpha = float(alpha)
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha:g}")
    if not s.real > 0:
        raise DomainError(f"sum of phi(s, n alpha) converges only for Re(s) > 0, got {s.real:g}")
    threshold = max(LATTICE_TAIL_START, 2.0 * abs(s) + 10.0)
    head_count = max(int(n_terms), int(math.ceil(threshold / alpha)))
    head = sum((phi_em(s, n * alpha) for n in range(1, head_count + 1)), 0j)

    start = head_count + 1.0
    with extended_precision(em_working_dps(s, complex(start), em_shift(s, complex(start))) + 5) as ctx:
        ss = ctx.mpc(s)
        aa = ctx.mpf(alpha)
        coefficients = _bernoulli_coefficients(ctx, ss)
        tail = ctx.mpc(0)
        for j, coef in enumerate(coefficients, start=1):
            order = ss + 2 * j - 1
            tail += coef * aa ** (1 - ss - 2 * j) * ctx.mpc(hurwitz_zeta_em(complex(order), start))
        tail_value = to_double(tail)
    logger.debug(f"phi lattice sum at s={s}, alpha={alpha}: {head_count} terms plus Bernoulli tail")
    return LatticeSum(head + tail_value, head_count, tail_value)


def _bernoulli_coefficients(ctx, s):  # type: ignore[no-untyped-def]
    """B_2j/(2j)! (s)_{2j-1} for j = 1..10"""
    coefficients = []
    rising = s
    for j in range(1, 11):
        coefficients.append(ctx.bernoulli(2 * j) / ctx.factorial(2 * j) * rising)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
    return coefficients
