"""Generalised hypergeometric series by term recurrence

Every evaluation reports how many digits the double-precision pass lost to
cancellation. When that loss exceeds ``SeriesControl.extended_digits`` the same
recurrence is repeated in extended precision; deciding whether the loss is
acceptable at all is left to the caller.
"""

from __future__ import annotations

import logging
import math
from typing import NamedTuple, Sequence

from hurwitzlommel.controls import DEFAULT_SERIES, SeriesControl
from hurwitzlommel.errors import NoConvergence, PoleError
from hurwitzlommel.kernels.precision import extended_precision, to_double
from hurwitzlommel.kernels.values import ComplexLike, is_nonpositive_integer, to_complex

logger = logging.getLogger(__name__)

_TINY = 1e-300


class SeriesResult(NamedTuple):
    value: complex
    terms_used: int
    cancellation_estimate: float


def _small_enough(term: float, total: float, peak: float, ctl: SeriesControl) -> bool:
    return term <= ctl.rel_tol * max(total, 2.2e-16 * peak, _TINY)


def _double_pass(
    a: Sequence[complex], b: Sequence[complex], z: complex, ctl: SeriesControl
) -> tuple[complex, int, float]:
    term = 1.0 + 0j
    total = 1.0 + 0j
    peak = 1.0
    small_run = 0
    n = 0
    while n < ctl.max_terms:
        num = z
        for ai in a:
            num *= ai + n
        den = complex(n + 1)
        for bi in b:
            den *= bi + n
        ratio = num / den
        term *= ratio
        total += term
        peak = max(peak, abs(total))
        n += 1
        if term == 0:
            return total, n, peak
        if abs(ratio) < 0.5 and _small_enough(abs(term), abs(total), peak, ctl):
            small_run += 1
            if small_run >= ctl.consecutive_small:
                return total, n, peak
        else:
            small_run = 0
    raise NoConvergence(f"hypergeometric series did not converge within {ctl.max_terms} terms")


def _extended_pass(
    a: Sequence[complex], b: Sequence[complex], z: complex, ctl: SeriesControl, dps: float
) -> complex:
    with extended_precision(dps) as ctx:
        zz = ctx.mpc(z)
        aa = [ctx.mpc(x) for x in a]
        bb = [ctx.mpc(x) for x in b]
        term = ctx.mpc(1)
        total = ctx.mpc(1)
        eps = ctx.mpf(10) ** (-ctx.dps)
        small_run = 0
        for n in range(ctl.max_terms):
            num = zz
            for ai in aa:
                num *= ai + n
            den = ctx.mpf(n + 1)
            for bi in bb:
                den *= bi + n
            term *= num / den
            total += term
            if term == 0:
                break
            if abs(term) <= eps * abs(total) and abs(num) < abs(den):
                small_run += 1
                if small_run >= ctl.consecutive_small:
                    break
            else:
                small_run = 0
        else:
            raise NoConvergence(
                f"extended hypergeometric series did not converge within {ctl.max_terms} terms"
            )
        return to_double(total)


def hyp_series(
    a: Sequence[ComplexLike],
    b: Sequence[ComplexLike],
    z: ComplexLike,
    ctl: SeriesControl = DEFAULT_SERIES,
) -> SeriesResult:
    """pFq(a; b; z) for p <= q + 1 by the ratio recurrence of successive terms"""
    aa = [to_complex(x, "a") for x in a]
    bb = [to_complex(x, "b") for x in b]
    zz = to_complex(z, "z")
    for bi in bb:
        if is_nonpositive_integer(bi):
            raise PoleError(f"lower parameter {bi.real:g} is a non-positive integer")
    if zz == 0:
        return SeriesResult(1.0 + 0j, 1, 0.0)

    total, n, peak = _double_pass(aa, bb, zz, ctl)
    digits = math.log10(peak / max(abs(total), _TINY))
    if digits > ctl.extended_digits:
        dps = 20.0 + digits
        logger.debug(f"hypergeometric pass lost {digits:.1f} digits at z={zz}; repeating at {dps:.0f} dps")
        total = _extended_pass(aa, bb, zz, ctl, dps)
    return SeriesResult(total, n, digits)


def hyp1f2(
    a1: ComplexLike,
    b1: ComplexLike,
    b2: ComplexLike,
    z: ComplexLike,
    ctl: SeriesControl = DEFAULT_SERIES,
) -> SeriesResult:
    """1F2(a1; b1, b2; z) with its term count and cancellation estimate (digits)"""
    return hyp_series([a1], [b1, b2], z, ctl)


def hyp0f1(b: ComplexLike, z: ComplexLike, ctl: SeriesControl = DEFAULT_SERIES) -> SeriesResult:
    """0F1(; b; z)"""
    return hyp_series([], [b], z, ctl)
