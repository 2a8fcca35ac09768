"""Complex gamma function

Lanczos approximation (g = 7, n = 9) on Re(z) >= 1/2 with the reflection formula
everywhere else, so the right half-plane evaluation is the only primitive.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
import numpy.typing as npt
from scipy import special

from hurwitzlommel.errors import NumericalOverflow, PoleError
from hurwitzlommel.kernels.values import ComplexLike, ensure_finite, is_nonpositive_integer, to_complex

_LANCZOS_G = 7.0
_LANCZOS_COEF = np.array(
    [
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    ]
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)
_LOG_MAX = math.log(np.finfo(float).max)


def lanczos_log_gamma(z: npt.ArrayLike) -> npt.NDArray[np.complex128]:
    """log Gamma(z) for Re(z) >= 1/2, vectorised over z"""
    w = np.asarray(z, dtype=np.complex128) - 1.0
    x = np.full_like(w, _LANCZOS_COEF[0])
    for i in range(1, len(_LANCZOS_COEF)):
        x = x + _LANCZOS_COEF[i] / (w + i)
    t = w + _LANCZOS_G + 0.5
    result: npt.NDArray[np.complex128] = _HALF_LOG_TWO_PI + (w + 0.5) * np.log(t) - t + np.log(x)
    return result


def sinpi(z: ComplexLike) -> complex:
    """sin(pi z) with the real part reduced first, exact zeros at integers"""
    z = complex(z)
    n = round(z.real)
    r = z.real - n
    sign = -1.0 if n % 2 else 1.0
    if r == 0.0:
        s, c = 0.0, 1.0
    elif abs(r) == 0.5:
        s, c = math.copysign(1.0, r), 0.0
    else:
        s, c = math.sin(math.pi * r), math.cos(math.pi * r)
    if z.imag == 0.0:
        return complex(sign * s, 0.0)
    y = math.pi * z.imag
    if abs(y) > _LOG_MAX:
        raise NumericalOverflow(f"|sin(pi z)| exceeds the double range at z = {z}")
    return sign * complex(s * math.cosh(y), c * math.sinh(y))


def cospi(z: ComplexLike) -> complex:
    """cos(pi z) with the real part reduced first, exact zeros at half-integers"""
    z = complex(z)
    return sinpi(z + 0.5)


def _log_sinpi(z: complex) -> complex:
    """log sin(pi z), written through exponentials when |Im z| would overflow cosh"""
    if abs(z.imag) < 20.0:
        return cmath.log(sinpi(z))
    if z.imag > 0:
        # sin(pi z) = i/2 e^{-i pi z} (1 - e^{2 i pi z})
        return cmath.log(0.5j) - 1j * math.pi * z + cmath.log(1.0 - cmath.exp(2j * math.pi * z))
    return cmath.log(-0.5j) + 1j * math.pi * z + cmath.log(1.0 - cmath.exp(-2j * math.pi * z))


def _log_gamma_any(z: complex) -> complex:
    """log Gamma on the whole plane minus the poles, branch not normalised"""
    if z.real >= 0.5:
        return complex(lanczos_log_gamma(z))
    return _LOG_PI - _log_sinpi(z) - complex(lanczos_log_gamma(1.0 - z))


def gamma(z: ComplexLike) -> complex:
    """Gamma(z) for complex z not a non-positive integer"""
    z = to_complex(z, "z")
    if is_nonpositive_integer(z):
        raise PoleError(f"Gamma has a pole at z = {z.real:g}")
    if z.imag == 0.0 and z.real == math.floor(z.real) and z.real <= 171:
        return complex(math.factorial(int(z.real) - 1))
    log_value = _log_gamma_any(z)
    if log_value.real > _LOG_MAX:
        raise NumericalOverflow(f"|Gamma({z})| exceeds the double range")
    return _exp_log(log_value, z, f"Gamma({z})")


def rgamma(z: ComplexLike) -> complex:
    """1/Gamma(z), zero at the poles of Gamma

    Grows like exp(pi |Im z| / 2) along vertical lines, so it is formed from
    log Gamma and overflows only where the value itself leaves the double range.
    """
    z = to_complex(z, "z")
    if is_nonpositive_integer(z):
        return 0j
    log_value = -_log_gamma_any(z)
    if log_value.real > _LOG_MAX:
        raise NumericalOverflow(f"|1/Gamma({z})| exceeds the double range")
    return _exp_log(log_value, z, f"1/Gamma({z})")


def _exp_log(log_value: complex, z: complex, what: str) -> complex:
    value = ensure_finite(cmath.exp(log_value), what)
    if z.imag == 0.0:
        # the reflection sign lives in the imaginary part of the log
        return complex(value.real, 0.0)
    return value


def log_gamma(z: ComplexLike) -> complex:
    """Principal branch of log Gamma(z), continuous off the negative real axis"""
    z = to_complex(z, "z")
    if is_nonpositive_integer(z):
        raise PoleError(f"log Gamma has a pole at z = {z.real:g}")
    return complex(special.loggamma(z))


def log_gamma_array(z: npt.ArrayLike) -> npt.NDArray[np.complex128]:
    """Principal log Gamma over an array; poles map to +inf"""
    result: npt.NDArray[np.complex128] = special.loggamma(np.asarray(z, dtype=np.complex128))
    return result
