"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument or parameter outside the domain of an operation."""


class DegenerateParameterError(DomainError):
    """Parameter combination that collapses a formula (poles, zero denominators)."""


class ConvergenceError(ArithmeticError):
    """A truncated process failed to meet its tolerance within its budget.

    Carries the best available estimate so callers can decide whether the
    partial answer is still usable.
    """

    def __init__(self, message, best=None, est_error=None):
        super().__init__(message)
        self.best = best
        self.est_error = est_error
