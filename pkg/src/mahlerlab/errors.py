"""Exception types shared across the package."""


class MahlerLabError(Exception):
    """Base class for all package-specific errors."""


class DomainError(MahlerLabError, ValueError):
    """Argument outside the mathematically supported domain."""


class DivergenceError(DomainError):
    """The requested quantity diverges at the given arguments."""


class SingularParameterError(DomainError):
    """A family parameter hits a singular value (e.g. k in {0, 4})."""


class SingularPointError(DomainError):
    """A pointwise formula has a vanishing denominator at this point."""


class RegimeError(DomainError):
    """Arguments fall outside the regime an operation is defined for."""


class UnsupportedCurveError(DomainError):
    """The parameter does not correspond to a supported curve."""


class AccuracyError(MahlerLabError, ArithmeticError):
    """Requested accuracy was not reached.

    Carries the best available estimate and its estimated error so callers
    can degrade gracefully.
    """

    def __init__(self, message, best_estimate=None, error_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_estimate = error_estimate


class LDataError(MahlerLabError, ValueError):
    """Inconsistent L-function data (no sign/coefficient choice works)."""
