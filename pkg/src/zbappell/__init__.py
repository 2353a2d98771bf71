"""Zero-balanced Appell F1 evaluation with a certified logarithmic approximation."""

from .appell import AppellParams, Point, elliptic_f, f1_eval
from .approx import (
    ApproxReport,
    Params,
    approx_report,
    f_zb,
    g_approx,
    kernel_f_trunc,
    kernel_h_trunc,
    log_expansion_series,
    remainder_bound,
    remainder_integral,
    rough_log,
)
from .controls import EvalResult, QuadratureControl, SeriesControl
from .errors import ConvergenceError, DegenerateParameterError, DomainError
from .hyp import HypParams2F1, HypParams3F2, f2f1, f3f2, ramanujan_2f1_approx
from .scalar import beta, digamma, ln_gamma, pochhammer, ramanujan_gamma, trigamma
from .verify import PropertyResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "AppellParams",
    "ApproxReport",
    "ConvergenceError",
    "DegenerateParameterError",
    "DomainError",
    "EvalResult",
    "HypParams2F1",
    "HypParams3F2",
    "Params",
    "Point",
    "PropertyResult",
    "QuadratureControl",
    "SeriesControl",
    "approx_report",
    "beta",
    "digamma",
    "elliptic_f",
    "f1_eval",
    "f2f1",
    "f3f2",
    "f_zb",
    "g_approx",
    "kernel_f_trunc",
    "kernel_h_trunc",
    "ln_gamma",
    "log_expansion_series",
    "pochhammer",
    "ramanujan_2f1_approx",
    "ramanujan_gamma",
    "remainder_bound",
    "remainder_integral",
    "rough_log",
    "run_suite",
    "__version__",
]
