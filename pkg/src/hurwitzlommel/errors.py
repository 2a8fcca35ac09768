"""Exception hierarchy for hurwitzlommel"""


class HurwitzLommelError(Exception):
    """Base class for every error raised by the library"""


class ConfigurationError(HurwitzLommelError, ValueError):
    """Invalid control object, tolerance profile or identity parameters"""


class DomainError(HurwitzLommelError, ValueError):
    """Arguments outside the region where a formula is valid"""


class PoleError(HurwitzLommelError, ZeroDivisionError):
    """Evaluation at (or within tolerance of) a pole"""


class BranchError(HurwitzLommelError, ValueError):
    """Argument on a branch cut, (-inf, 0] unless stated otherwise"""


class DegenerateOrder(HurwitzLommelError, ValueError):
    """Lommel or Bessel order at which the defining expression degenerates"""


class NoConvergence(HurwitzLommelError, ArithmeticError):
    """A series or iteration exhausted its term budget"""


class CancellationError(HurwitzLommelError, ArithmeticError):
    """Catastrophic cancellation beyond the caller's digit budget"""

    def __init__(self, message: str, digits: float):
        super().__init__(message)
        self.digits = digits


class QuadratureFailure(HurwitzLommelError, ArithmeticError):
    """Quadrature could not certify its tail bound"""


class ContourError(HurwitzLommelError, ValueError):
    """Vertical contour abscissa violates the separation conditions"""


class TailBoundExceeded(HurwitzLommelError, ArithmeticError):
    """Truncated contour tail cannot be bounded below the tolerance"""


class DoublePoleProximity(HurwitzLommelError, ArithmeticError):
    """Residue expansion too close to a coalescence of poles"""


class NumericalOverflow(HurwitzLommelError, OverflowError):
    """Result magnitude outside the double range"""


class SkipCase(HurwitzLommelError):
    """Raised by an identity check that cannot be decided numerically"""
