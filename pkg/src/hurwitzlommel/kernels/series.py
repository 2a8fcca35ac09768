"""Oscillatory Dirichlet series sum_{n>=1} z^n n^{-w} on the closed unit disc

The tail beyond N is summed through the shift-operator expansion

    sum_{m>=0} z^{N+m} f(N+m) = z^N sum_k c_k f^{(k)}(N),  1/(1 - z e^t) = sum_k c_k t^k,

with f(n) = n^{-w}. The expansion is asymptotic in N with smallest term about
exp(-N |log z|), so N is chosen from the distance of z to 1. The whole sum is
accumulated in extended precision because the partial sums grow like N^{-Re w}
when Re w < 0.
"""

from __future__ import annotations

import cmath
import logging
import math
import sys

from hurwitzlommel.controls import DEFAULT_SERIES, Acceleration, SeriesControl
from hurwitzlommel.errors import DomainError, NoConvergence
from hurwitzlommel.kernels.hypergeometric import SeriesResult
from hurwitzlommel.kernels.precision import extended_precision, to_double
from hurwitzlommel.kernels.values import ComplexLike, to_complex

logger = logging.getLogger(__name__)

MIN_DIRECT_TERMS = 64
TAIL_EXPONENT = 40.0
MAX_TAIL_TERMS = 150
# above this the expansion has not settled and the sum is not returned
STALL_LIMIT = 1e-10


def _direct_terms(z: complex, w: complex, r: float, ctl: SeriesControl) -> int:
    n = int(math.ceil(max(MIN_DIRECT_TERMS, (TAIL_EXPONENT + abs(w)) / r)))
    if n > ctl.max_terms:
        raise NoConvergence(
            f"z = {z} is too close to 1 for a {ctl.max_terms}-term transformed sum (needs {n})"
        )
    return n


def polylog_sum(z: ComplexLike, w: ComplexLike, ctl: SeriesControl = DEFAULT_SERIES) -> SeriesResult:
    """sum_{n>=1} z^n / n^w for |z| <= 1, continued analytically in w

    z = 1 reduces to zeta(w). With ``acceleration=none`` only absolutely or
    boundedly convergent cases are summed directly.
    """
    z = to_complex(z, "z")
    w = to_complex(w, "w")
    if abs(z) > 1.0 + 1e-14:
        raise DomainError(f"polylog_sum needs |z| <= 1, got |z| = {abs(z):.17g}")
    if z == 1:
        from hurwitzlommel.zeta.riemann import riemann_zeta

        return SeriesResult(riemann_zeta(w), 0, 0.0)
    if ctl.acceleration is Acceleration.NONE:
        return _plain_sum(z, w, ctl)

    r = abs(cmath.log(z))
    n_direct = _direct_terms(z, w, r, ctl)
    dps = 20.0 + max(0.0, -w.real) * math.log10(n_direct) + max(0.0, math.log10(1.0 / r))

    with extended_precision(dps) as ctx:
        zz = ctx.mpc(z)
        ww = ctx.mpc(w)
        power = ctx.mpc(1)
        direct = ctx.mpc(0)
        peak = ctx.mpf(0)
        for n in range(1, n_direct):
            power *= zz
            direct += power * ctx.power(n, -ww)
            peak = max(peak, abs(direct))

        one_minus = 1 - zz
        coef = [1 / one_minus]
        inv_fact = [ctx.mpf(1)]
        deriv = ctx.power(n_direct, -ww)
        tail = coef[0] * deriv
        eps = ctx.mpf(10) ** (-(ctx.dps - 2))
        # consecutive pairs, since coefficients vanish alternately when z = -1
        last = abs(tail)
        pair = last
        used = 1
        for k in range(1, MAX_TAIL_TERMS):
            inv_fact.append(inv_fact[-1] / k)
            coef.append(zz * ctx.fsum(coef[k - j] * inv_fact[j] for j in range(1, k + 1)) / one_minus)
            deriv *= (-ww - (k - 1)) / n_direct
            term = coef[k] * deriv
            new_pair = abs(term) + last
            if k > 8 and new_pair > pair:
                # asymptotic: stop at the smallest terms
                break
            tail += term
            used = k + 1
            last = abs(term)
            pair = new_pair
            if pair <= eps * abs(tail):
                break
        total = direct + (zz ** n_direct) * tail
        # the stalled remainder only matters against the whole sum
        stall = float(pair / max(abs(total), abs(tail), ctx.mpf(10) ** -300))
        if stall > STALL_LIMIT:
            raise NoConvergence(f"tail expansion of sum z^n n^-w stalled at relative size {stall:.3g}")
        if stall > max(ctl.rel_tol, 64 * sys.float_info.epsilon):
            logger.debug(f"polylog_sum(z={z}, w={w}): tail expansion stalled at relative size {stall:.3g}")
        peak = max(peak, abs(tail))
        digits = float(ctx.log10(peak / max(abs(total), ctx.mpf(10) ** -300))) if peak else 0.0

    logger.debug(f"polylog_sum(z={z}, w={w}): {n_direct} direct terms, {used} tail terms")
    return SeriesResult(to_double(total), n_direct + used, max(digits, 0.0))


def _plain_sum(z: complex, w: complex, ctl: SeriesControl) -> SeriesResult:
    if w.real <= 0.0 and abs(z) >= 1.0:
        raise NoConvergence(f"sum z^n n^-w diverges for Re(w) = {w.real:g} without acceleration")
    total = 0j
    power = 1.0 + 0j
    small_run = 0
    for n in range(1, ctl.max_terms + 1):
        power *= z
        term = power * cmath.exp(-w * math.log(n))
        total += term
        if abs(term) <= ctl.rel_tol * abs(total):
            small_run += 1
            if small_run >= ctl.consecutive_small:
                return SeriesResult(total, n, 0.0)
        else:
            small_run = 0
    logger.debug(f"plain sum of z^n n^-w truncated at {ctl.max_terms} terms")
    return SeriesResult(total, ctl.max_terms, 0.0)
