"""Elementary complex special functions composed by every other layer"""

from hurwitzlommel.kernels.values import ComplexValue, ComplexLike

from hurwitzlommel.kernels.gamma import (
    gamma,
    log_gamma,
    rgamma,
    sinpi,
    cospi,
)

from hurwitzlommel.kernels.hypergeometric import SeriesResult, hyp1f2, hyp0f1

from hurwitzlommel.kernels.bessel import bessel_j, bessel_y

from hurwitzlommel.kernels.divisor import sigma_divisor, sigma_table

from hurwitzlommel.kernels.series import polylog_sum

from hurwitzlommel.kernels.quadrature import QuadratureResult, integrate_semi_infinite

__all__ = [
    "ComplexValue",
    "ComplexLike",
    # Gamma
    "gamma",
    "log_gamma",
    "rgamma",
    "sinpi",
    "cospi",
    # Series
    "SeriesResult",
    "hyp1f2",
    "hyp0f1",
    "polylog_sum",
    # Bessel
    "bessel_j",
    "bessel_y",
    # Divisors
    "sigma_divisor",
    "sigma_table",
    # Quadrature
    "QuadratureResult",
    "integrate_semi_infinite",
]
