"""Bessel functions of the first and second kinds"""

from __future__ import annotations

import cmath
import math

from hurwitzlommel.controls import DEFAULT_SERIES, SeriesControl
from hurwitzlommel.errors import BranchError, DegenerateOrder, PoleError
from hurwitzlommel.kernels.gamma import cospi, rgamma, sinpi
from hurwitzlommel.kernels.hypergeometric import hyp0f1
from hurwitzlommel.kernels.values import (
    DEGENERACY_TOL,
    ComplexLike,
    is_nonpositive_integer,
    near_integer,
    on_negative_axis,
    to_complex,
)


def bessel_j_half(sign: int, z: complex) -> complex:
    """J_{1/2}(z) for sign=+1 and J_{-1/2}(z) for sign=-1, principal branch"""
    factor = cmath.sqrt(2.0 / (math.pi * z))
    return factor * (cmath.sin(z) if sign > 0 else cmath.cos(z))


def bessel_j(nu: ComplexLike, z: ComplexLike, ctl: SeriesControl = DEFAULT_SERIES) -> complex:
    """J_nu(z) from the ascending series, closed forms at nu = +-1/2"""
    nu = to_complex(nu, "nu")
    z = to_complex(z, "z")
    if z == 0:
        if nu == 0:
            return 1.0 + 0j
        if nu.real > 0 or is_nonpositive_integer(nu):
            return 0j
        raise PoleError(f"J_nu(0) is infinite for nu = {nu}")
    if on_negative_axis(z):
        raise BranchError(f"z = {z.real:g} lies on the branch cut (-inf, 0]")
    if nu == 0.5:
        return bessel_j_half(1, z)
    if nu == -0.5:
        return bessel_j_half(-1, z)
    if nu != 0 and is_nonpositive_integer(nu):
        n = -int(round(nu.real))
        return (-1) ** n * bessel_j(float(n), z, ctl)
    series = hyp0f1(nu + 1.0, -z * z / 4.0, ctl)
    return cmath.exp(nu * cmath.log(z / 2.0)) * rgamma(nu + 1.0) * series.value


def bessel_y(nu: ComplexLike, z: ComplexLike, ctl: SeriesControl = DEFAULT_SERIES) -> complex:
    """Y_nu(z) for non-integer nu through the J_{+-nu} combination"""
    nu = to_complex(nu, "nu")
    z = to_complex(z, "z")
    if near_integer(nu, DEGENERACY_TOL):
        raise DegenerateOrder(f"Y_nu needs a non-integer order, got nu = {nu}")
    if on_negative_axis(z):
        raise BranchError(f"z = {z.real:g} lies on the branch cut (-inf, 0]")
    return (bessel_j(nu, z, ctl) * cospi(nu) - bessel_j(-nu, z, ctl)) / sinpi(nu)
