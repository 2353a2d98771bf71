"""Truncation controls and the common result record for numeric evaluations."""

from dataclasses import dataclass

from .errors import DomainError

# Dispatch tag vocabulary used by EvalResult.method.
METHOD_DIRECT = "direct-series"
METHOD_LOG = "log-expansion"
METHOD_CLOSED = "closed-form"
METHOD_TRANSFORMED = "transformed"
METHOD_QUADRATURE = "quadrature"


@dataclass(frozen=True)
class SeriesControl:
    """Stop rule for series summation.

    Summation stops once `consecutive_small` successive terms satisfy
    |term| <= max(rel_tol * |partial sum|, abs_tol).  Exceeding `max_terms`
    without meeting the rule raises ConvergenceError.
    """

    rel_tol: float = 1e-14
    abs_tol: float = 1e-300
    max_terms: int = 200000
    consecutive_small: int = 3

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise DomainError("tolerances must be positive")
        if self.max_terms < 1 or self.consecutive_small < 1:
            raise DomainError("max_terms and consecutive_small must be >= 1")

    def is_small(self, term: float, partial: float) -> bool:
        return abs(term) <= max(self.rel_tol * abs(partial), self.abs_tol)


@dataclass(frozen=True)
class QuadratureControl:
    """Budget for adaptive quadrature."""

    rel_tol: float = 1e-12
    abs_tol: float = 1e-300
    max_subdivisions: int = 2000

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise DomainError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")


@dataclass(frozen=True)
class EvalResult:
    """Value of a truncated evaluation together with its bookkeeping.

    est_error is an estimate of the truncation/discretization error, not a
    rigorous bound; method records which evaluation route produced the value.
    """

    value: float
    est_error: float
    terms_used: int
    method: str
