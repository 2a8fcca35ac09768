"""Thread-local extended-precision contexts

Extended precision is an internal accumulation device only. Each thread gets its
own ``mpmath.MPContext`` so concurrent suite runs never race on ``mp.dps``.
"""

from __future__ import annotations

import logging
import threading
from contextlib import contextmanager
from typing import Iterator

import mpmath

logger = logging.getLogger(__name__)

MAX_DPS = 400

_local = threading.local()


def _context() -> mpmath.MPContext:
    ctx = getattr(_local, "ctx", None)
    if ctx is None:
        ctx = mpmath.MPContext()
        _local.ctx = ctx
    return ctx


@contextmanager
def extended_precision(dps: float) -> Iterator[mpmath.MPContext]:
    """Yield this thread's context set to ``dps`` decimal digits, restoring it afterwards"""
    ctx = _context()
    previous = ctx.dps
    ctx.dps = int(min(max(dps, 15), MAX_DPS))
    try:
        yield ctx
    finally:
        ctx.dps = previous


def to_double(value: object) -> complex:
    """Round an mpmath number back to a Python complex"""
    return complex(value)  # type: ignore[arg-type]
