"""Complex value coercion and finiteness checks shared by every kernel"""

from __future__ import annotations

import cmath
import math
from numbers import Number
from typing import Union

from hurwitzlommel.errors import NumericalOverflow

ComplexLike = Union[complex, float, int]

# A function value carried at double working precision
ComplexValue = complex

#: distance to an integer below which an order or argument counts as that integer
DEGENERACY_TOL = 1e-8


def to_complex(value: object, name: str = "argument") -> complex:
    """Coerce a real or complex scalar, rejecting NaN and infinities"""
    if isinstance(value, bool) or not isinstance(value, Number):
        raise TypeError(f"{name} must be a real or complex number, got {type(value).__name__}")
    z = complex(value)  # type: ignore[arg-type]
    if not cmath.isfinite(z):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return z


def ensure_finite(value: complex, what: str) -> complex:
    """Surface overflow or NaN as an explicit error instead of returning it"""
    if not cmath.isfinite(value):
        raise NumericalOverflow(f"{what} is not representable in double precision ({value!r})")
    return value


def near_integer(z: complex, tol: float = DEGENERACY_TOL) -> bool:
    """True when z lies within tol of a (real) integer"""
    return abs(z.imag) <= tol and abs(z.real - round(z.real)) <= tol


def is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real)


def on_negative_axis(z: complex) -> bool:
    """True for z on the principal-branch cut (-inf, 0]"""
    return z.imag == 0.0 and z.real <= 0.0
