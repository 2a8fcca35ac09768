"""Immutable control objects for series truncation, quadrature and contour integration"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

from hurwitzlommel.errors import ConfigurationError


class Acceleration(str, Enum):
    """Acceleration applied to slowly convergent series"""

    NONE = "none"
    EULER_TRANSFORM = "euler_transform"


class QuadratureScheme(str, Enum):
    """Per-panel rule used on semi-infinite integrals"""

    GAUSS_LEGENDRE_PANELS = "gauss_legendre_panels"
    TANH_SINH = "tanh_sinh"


class Route(str, Enum):
    """Evaluation route for S_{-s-1/2,1/2}"""

    SERIES_SMALL_Z = "series_small_z"
    INTEGRAL_LARGE_Z = "integral_large_z"
    AUTO = "auto"


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for infinite series

    A series stops once ``consecutive_small`` successive terms fall below
    ``rel_tol`` times the running sum. Recurrences whose double pass loses more
    than ``extended_digits`` digits to cancellation are re-run in extended
    precision.
    """

    max_terms: int = 20000
    rel_tol: float = 1e-16
    consecutive_small: int = 2
    acceleration: Acceleration = Acceleration.EULER_TRANSFORM
    extended_digits: float = 4.0

    def __post_init__(self) -> None:
        if isinstance(self.acceleration, str) and not isinstance(self.acceleration, Acceleration):
            object.__setattr__(self, "acceleration", Acceleration(self.acceleration))
        if self.max_terms < 8:
            raise ConfigurationError(f"max_terms must be at least 8, got {self.max_terms}")
        if not 0.0 < self.rel_tol < 1.0:
            raise ConfigurationError(f"rel_tol must lie in (0, 1), got {self.rel_tol}")
        if self.consecutive_small < 2:
            raise ConfigurationError(
                f"consecutive_small must be at least 2, got {self.consecutive_small}"
            )
        if self.extended_digits < 0:
            raise ConfigurationError(
                f"extended_digits must be non-negative, got {self.extended_digits}"
            )

    def with_options(self, **changes: object) -> SeriesControl:
        """Copy with some fields replaced"""
        return replace(self, **changes)  # type: ignore[arg-type]


@dataclass(frozen=True)
class QuadratureSpec:
    """Node and panel policy for integrals over [0, inf)

    ``x_max`` and ``panel_count`` are derived from the integrand's tail bound and
    singularity distance when left as None. The discarded tail must satisfy
    ``tail <= max(abs_tol, rel_tol * |value|)``.
    """

    scheme: QuadratureScheme = QuadratureScheme.GAUSS_LEGENDRE_PANELS
    panel_count: Optional[int] = None
    nodes_per_panel: int = 20
    x_max: Optional[float] = None
    abs_tol: float = 1e-16
    rel_tol: float = 1e-15

    def __post_init__(self) -> None:
        if isinstance(self.scheme, str) and not isinstance(self.scheme, QuadratureScheme):
            object.__setattr__(self, "scheme", QuadratureScheme(self.scheme))
        if self.panel_count is not None and self.panel_count < 1:
            raise ConfigurationError(f"panel_count must be positive, got {self.panel_count}")
        if not 2 <= self.nodes_per_panel <= 400:
            raise ConfigurationError(
                f"nodes_per_panel must lie in [2, 400], got {self.nodes_per_panel}"
            )
        if self.x_max is not None and not (self.x_max > 0 and math.isfinite(self.x_max)):
            raise ConfigurationError(f"x_max must be positive and finite, got {self.x_max}")
        if not self.abs_tol > 0:
            raise ConfigurationError(f"abs_tol must be positive, got {self.abs_tol}")
        if not 0.0 < self.rel_tol < 1.0:
            raise ConfigurationError(f"rel_tol must lie in (0, 1), got {self.rel_tol}")


@dataclass(frozen=True)
class ContourSpec:
    """Vertical line xi = c + it, |t| <= t_max, for Mellin-Barnes integrals

    ``c`` and ``t_max`` are chosen from the integrand when None. ``nodes`` is the
    Gauss-Legendre count per panel; ``tol`` bounds the discarded tails.
    """

    c: Optional[float] = None
    t_max: Optional[float] = None
    nodes: int = 24
    tol: float = 1e-16

    def __post_init__(self) -> None:
        if self.c is not None and not math.isfinite(self.c):
            raise ConfigurationError(f"contour abscissa must be finite, got {self.c}")
        if self.t_max is not None and not self.t_max > 0:
            raise ConfigurationError(f"t_max must be positive, got {self.t_max}")
        if not 2 <= self.nodes <= 400:
            raise ConfigurationError(f"nodes must lie in [2, 400], got {self.nodes}")
        if not self.tol > 0:
            raise ConfigurationError(f"tol must be positive, got {self.tol}")


@dataclass(frozen=True)
class EvalRoute:
    """Route selection for the special Lommel function"""

    route: Route = Route.AUTO
    switch_radius: float = 10.0

    def __post_init__(self) -> None:
        if isinstance(self.route, str) and not isinstance(self.route, Route):
            object.__setattr__(self, "route", Route(self.route))
        if not self.switch_radius > 0:
            raise ConfigurationError(f"switch_radius must be positive, got {self.switch_radius}")


DEFAULT_SERIES = SeriesControl()
DEFAULT_QUADRATURE = QuadratureSpec()
DEFAULT_CONTOUR = ContourSpec()
DEFAULT_ROUTE = EvalRoute()
