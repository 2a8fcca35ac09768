"""Riemann zeta and the completed functions xi(w), Xi(t)"""

from __future__ import annotations

import cmath
import logging
import math

from hurwitzlommel.errors import PoleError
from hurwitzlommel.kernels.gamma import gamma, log_gamma, sinpi
from hurwitzlommel.kernels.values import ComplexLike, to_complex
from hurwitzlommel.zeta.hurwitz import hurwitz_zeta_em

logger = logging.getLogger(__name__)

EULER_GAMMA = 0.57721566490153286061
REFLECT_BELOW = -10.0
REMOVABLE_RADIUS = 1e-6


def riemann_zeta(s: ComplexLike) -> complex:
    """zeta(s) on the plane minus s = 1

    Euler-Maclaurin at a = 1, except for Re(s) < -10 where the functional
    equation zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s) is applied in
    log space.
    """
    s = to_complex(s, "s")
    if s == 1:
        raise PoleError("the Riemann zeta function has a pole at s = 1")
    if s.imag == 0.0 and s.real < 0 and s.real % 2 == 0:
        return 0j
    if s.real >= REFLECT_BELOW:
        return hurwitz_zeta_em(s, 1.0)
    logger.debug(f"riemann_zeta({s}): reflecting through the functional equation")
    log_factor = s * math.log(2.0) + (s - 1.0) * math.log(math.pi) + log_gamma(1.0 - s)
    value = cmath.exp(log_factor) * sinpi(s / 2.0) * hurwitz_zeta_em(1.0 - s, 1.0)
    if s.imag == 0.0:
        return complex(value.real, 0.0)
    return value


def functional_equation_rhs(s: ComplexLike) -> complex:
    """2 Gamma(1-s) (2 pi)^(s-1) sin(pi s/2) zeta(1-s), the image of zeta(s)"""
    s = to_complex(s, "s")
    sine = sinpi(s / 2.0)
    if sine == 0:
        return 0j
    return 2.0 * gamma(1.0 - s) * cmath.exp((s - 1.0) * math.log(2.0 * math.pi)) * sine * riemann_zeta(1.0 - s)


def _xi_near_one(w: complex) -> complex:
    # (w - 1) zeta(w) = 1 + gamma_E (w - 1) + O((w-1)^2)
    residue_part = 1.0 + EULER_GAMMA * (w - 1.0)
    return 0.5 * w * cmath.exp(-0.5 * w * math.log(math.pi)) * gamma(w / 2.0) * residue_part


def xi_completed(w: ComplexLike) -> complex:
    """xi(w) = 1/2 w (w-1) pi^(-w/2) Gamma(w/2) zeta(w), entire"""
    w = to_complex(w, "w")
    if w == 0 or w == 1:
        return 0.5 + 0j
    if abs(w - 1.0) < REMOVABLE_RADIUS:
        return _xi_near_one(w)
    if abs(w) < REMOVABLE_RADIUS:
        return _xi_near_one(1.0 - w)
    half = w / 2.0
    if half.real < 0 and abs(half - round(half.real)) < REMOVABLE_RADIUS:
        # Gamma(w/2) pole against a trivial zero of zeta
        return xi_completed(1.0 - w)
    prefactor = 0.5 * w * (w - 1.0) * cmath.exp(-half * math.log(math.pi))
    return prefactor * gamma(half) * riemann_zeta(w)


def xi_capital(t: ComplexLike) -> complex:
    """Xi(t) = xi(1/2 + it)"""
    t = to_complex(t, "t")
    return xi_completed(0.5 + 1j * t)
