class TMZVError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(TMZVError, ValueError):
    """An argument lies outside the domain of the operation."""


class PoleError(DomainError):
    """A rational evaluation hit a zero denominator or a parameter pole."""


class ConvergenceError(TMZVError, ArithmeticError):
    """An evaluator reached its cutoff ceiling before meeting the tolerance.

    The last estimate is kept on the exception so callers can still inspect it.
    """

    def __init__(self, message, last_estimate=None, error_bound=None, cutoff=None):
        super().__init__(message)
        self.last_estimate = last_estimate
        self.error_bound = error_bound
        self.cutoff = cutoff
