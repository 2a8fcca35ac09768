"""Composite quadrature on finite intervals and on [0, inf)

Integrands are vectorised callables mapping a float array of nodes to a complex
array. Panel sums are reduced with ``numpy.sum`` over arrays of fixed layout, so
a given QuadratureSpec always produces the same bits.
"""

from __future__ import annotations

import functools
import logging
import math
from typing import Callable, NamedTuple

import numpy as np
import numpy.typing as npt
from scipy.special import roots_legendre

from hurwitzlommel.controls import DEFAULT_QUADRATURE, QuadratureScheme, QuadratureSpec
from hurwitzlommel.errors import QuadratureFailure

logger = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]
ComplexArray = npt.NDArray[np.complex128]
Integrand = Callable[[FloatArray], ComplexArray]

TANH_SINH_T_MAX = 3.0
MAX_EXTENSIONS = 40


class QuadratureResult(NamedTuple):
    value: complex
    nodes_used: int
    x_max: float
    tail_bound: float


@functools.lru_cache(maxsize=64)
def gauss_legendre_rule(n: int) -> tuple[FloatArray, FloatArray]:
    """Gauss-Legendre nodes and weights on [-1, 1]"""
    x, w = roots_legendre(n)
    return np.asarray(x, dtype=np.float64), np.asarray(w, dtype=np.float64)


@functools.lru_cache(maxsize=64)
def tanh_sinh_rule(n: int) -> tuple[FloatArray, FloatArray]:
    """Tanh-sinh nodes and weights on [-1, 1] with about n points, t in [-3, 3]"""
    m = max(n // 2, 1)
    h = TANH_SINH_T_MAX / m
    t = h * np.arange(-m, m + 1)
    phi = 0.5 * np.pi * np.sinh(t)
    x = np.tanh(phi)
    w = h * 0.5 * np.pi * np.cosh(t) / np.cosh(phi) ** 2
    return x, w


def panel_rule(scheme: QuadratureScheme, n: int) -> tuple[FloatArray, FloatArray]:
    if scheme is QuadratureScheme.TANH_SINH:
        return tanh_sinh_rule(n)
    return gauss_legendre_rule(n)


def integrate_edges(f: Integrand, edges: FloatArray, scheme: QuadratureScheme, n: int) -> tuple[complex, int]:
    """Sum of the rule over consecutive panels [edges[i], edges[i+1]]"""
    x, w = panel_rule(scheme, n)
    lo = edges[:-1, None]
    half = 0.5 * (edges[1:, None] - lo)
    nodes = lo + half * (x[None, :] + 1.0)
    values = np.asarray(f(nodes.ravel()), dtype=np.complex128).reshape(nodes.shape)
    panel_sums = np.sum(values * (half * w[None, :]), axis=1)
    return complex(np.sum(panel_sums)), int(nodes.size)


def integrate_interval(
    f: Integrand,
    lo: float,
    hi: float,
    *,
    max_width: float,
    nodes: int,
    scheme: QuadratureScheme = QuadratureScheme.GAUSS_LEGENDRE_PANELS,
) -> tuple[complex, int]:
    """Uniform panels of width at most max_width over [lo, hi]"""
    count = max(1, int(math.ceil((hi - lo) / max_width)))
    edges = np.linspace(lo, hi, count + 1)
    return integrate_edges(f, edges, scheme, nodes)


def graded_edges(start: float, stop: float, singularity_distance: float, decay: float) -> FloatArray:
    """Panel edges whose width never exceeds the distance to the nearest complex singularity"""
    edges = [start]
    x = start
    cap = min(1.0, 4.0 / decay) if decay > 0 else 1.0
    while x < stop:
        width = min(cap, math.hypot(x, singularity_distance))
        x = min(stop, x + width)
        edges.append(x)
    return np.asarray(edges)


def integrate_semi_infinite(
    f: Integrand,
    *,
    decay: float,
    singularity_distance: float,
    tail_bound: Callable[[float], float],
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> QuadratureResult:
    """Integral of f over [0, inf) truncated where ``tail_bound`` certifies the remainder

    ``decay`` is the exponential rate of the integrand envelope and
    ``singularity_distance`` the distance from the real axis to the nearest
    singularity of f near the origin.
    """
    if spec.x_max is not None:
        x_max = spec.x_max
    else:
        x_max = max(8.0 * 2.0 * math.pi / decay, math.log(1.0 / spec.abs_tol) / decay)

    def edges_for(lo: float, hi: float) -> FloatArray:
        if spec.panel_count is not None:
            return np.linspace(lo, hi, spec.panel_count + 1)
        return graded_edges(lo, hi, singularity_distance, decay)

    value, used = integrate_edges(f, edges_for(0.0, x_max), spec.scheme, spec.nodes_per_panel)
    bound = tail_bound(x_max)
    extensions = 0
    while bound > max(spec.abs_tol, spec.rel_tol * abs(value)):
        if spec.x_max is not None or extensions >= MAX_EXTENSIONS:
            raise QuadratureFailure(
                f"tail beyond x_max={x_max:.6g} is bounded by {bound:.3g}, above the requested tolerance"
            )
        new_max = x_max + max(1.0, 0.5 * x_max)
        extra, extra_used = integrate_edges(f, edges_for(x_max, new_max), spec.scheme, spec.nodes_per_panel)
        value += extra
        used += extra_used
        x_max = new_max
        bound = tail_bound(x_max)
        extensions += 1
    logger.debug(f"semi-infinite quadrature: x_max={x_max:.6g}, nodes={used}, tail<={bound:.3g}")
    return QuadratureResult(value, used, x_max, bound)


def exponential_tail(envelope: Callable[[float], float], decay: float, growth: float = 0.0) -> Callable[[float], float]:
    """Tail bound for integrands below envelope(x) beyond x whose envelope decays at least like e^{-(decay - growth/x) x}"""

    def bound(x: float) -> float:
        rate = decay - growth / max(x, 1e-300)
        if rate <= 0:
            return math.inf
        return envelope(x) / rate

    return bound
