"""Divisor power sums sigma_s(n)"""

from __future__ import annotations

import functools
import math

import numpy as np
import numpy.typing as npt

from hurwitzlommel.errors import DomainError
from hurwitzlommel.kernels.values import ComplexLike, to_complex


@functools.lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    """Sorted divisors of n by trial division up to sqrt(n)"""
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    small: list[int] = []
    large: list[int] = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return tuple(small + large[::-1])


def sigma_divisor(s: ComplexLike, n: int) -> complex:
    """sigma_s(n) = sum of d**s over the divisors d of n"""
    s = to_complex(s, "s")
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    return sum((complex(d) ** s for d in divisors(int(n))), 0j)


def sigma_table(s: ComplexLike, count: int) -> npt.NDArray[np.complex128]:
    """sigma_s(m) for m = 1..count (index 0 unused), by a divisor sieve"""
    s = to_complex(s, "s")
    if count < 1:
        raise DomainError(f"count must be positive, got {count}")
    table = np.zeros(count + 1, dtype=np.complex128)
    powers = np.zeros(count + 1, dtype=np.complex128)
    powers[1:] = np.arange(1, count + 1, dtype=np.complex128) ** s
    for d in range(1, count + 1):
        table[d::d] += powers[d]
    return table
