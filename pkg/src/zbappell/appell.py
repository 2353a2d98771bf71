"""First Appell hypergeometric function F1 and its evaluation routes.

F1(alpha; beta1, beta2; gamma; x, y) is the double power series

    sum_{k,n>=0} (alpha)_{k+n} (beta1)_k (beta2)_n
                 / ((gamma)_{k+n} k! n!) x^k y^n,        |x|, |y| < 1.

Three routes are implemented and cross-checked: anti-diagonal summation of
the double series, a single series over one index with Gauss-function values
inside, and (for zero-balanced positive parameters) the Euler-type integral
over (0, inf).  A dispatcher picks the route by argument size.
"""

import math
from dataclasses import dataclass

import numpy as np

from .controls import (METHOD_CLOSED, METHOD_DIRECT, METHOD_QUADRATURE,
                       METHOD_TRANSFORMED, EvalResult, QuadratureControl,
                       SeriesControl)
from .errors import ConvergenceError, DegenerateParameterError, DomainError
from .hyp import HypParams2F1, f2f1, zb_2f1_log_expansion
from .quadrature import integrate_semi_infinite
from .scalar import beta

_ZB_EPS = 1e-14

# Arguments above this go to the integral or transformed route; below it the
# double series is fastest.  Overridable through the f1_eval keyword.
DISPATCH_THRESHOLD = 0.9


@dataclass(frozen=True)
class AppellParams:
    alpha: float
    beta1: float
    beta2: float
    gamma: float

    def __post_init__(self):
        if self.gamma <= 0.0 and self.gamma == math.floor(self.gamma):
            raise DegenerateParameterError(f"gamma={self.gamma!r} is a non-positive integer")

    @property
    def zero_balanced(self) -> bool:
        return abs(self.gamma - (self.alpha + self.beta1 + self.beta2)) \
            <= _ZB_EPS * max(1.0, abs(self.gamma))

    @property
    def all_positive(self) -> bool:
        return self.alpha > 0.0 and self.beta1 > 0.0 and self.beta2 > 0.0

    def swapped(self) -> "AppellParams":
        return AppellParams(self.alpha, self.beta2, self.beta1, self.gamma)


@dataclass(frozen=True)
class Point:
    """Evaluation point with the derived quantities of the corner geometry."""

    x: float
    y: float

    @classmethod
    def approx_domain(cls, x: float, y: float) -> "Point":
        if not (0.0 <= x < 1.0 and 0.0 <= y <= 1.0):
            raise DomainError(f"approximation domain needs 0 <= x < 1, 0 <= y <= 1, got ({x!r}, {y!r})")
        return cls(x, y)

    @classmethod
    def series_domain(cls, x: float, y: float) -> "Point":
        if not (abs(x) < 1.0 and abs(y) < 1.0):
            raise DomainError(f"series domain needs |x| < 1 and |y| < 1, got ({x!r}, {y!r})")
        return cls(x, y)

    @property
    def u(self) -> float:
        return 1.0 - self.x

    @property
    def v(self) -> float:
        return 1.0 - self.y

    @property
    def w(self) -> float:
        return (self.y - self.x) / (1.0 - self.x)

    def rhombic_r(self, b1: float, b2: float) -> float:
        return self.u * b1 + self.v * b2


def _poch_power_row(base: float, z: float, n: int) -> np.ndarray:
    """Array of (base)_k z^k / k! for k = 0 .. n-1."""
    if n <= 0:
        return np.ones(0)
    k = np.arange(1, n, dtype=float)
    ratios = (base + k - 1.0) * z / k
    return np.concatenate(([1.0], np.cumprod(ratios)))


def f1_double_series(p: AppellParams, x: float, y: float,
                     ctl: SeriesControl = SeriesControl()) -> EvalResult:
    """Anti-diagonal summation of the F1 double series for |x|, |y| < 1.

    Each diagonal d carries (alpha)_d/(gamma)_d times the convolution of the
    one-variable coefficient rows, so a whole diagonal is one dot product.
    """
    Point.series_domain(x, y)
    if x == 0.0 and y == 0.0:
        return EvalResult(1.0, 0.0, 1, METHOD_DIRECT)
    size = 128
    cap = min(ctl.max_terms, 1 << 16)
    while True:
        a_row = _poch_power_row(p.beta1, x, size)
        b_row = _poch_power_row(p.beta2, y, size)
        diag = np.convolve(a_row, b_row)[:size]
        k = np.arange(size - 1, dtype=float)
        rho = np.concatenate(([1.0], np.cumprod((p.alpha + k) / (p.gamma + k))))
        terms = rho * diag
        partial = 0.0
        small = 0
        for d in range(size):
            partial += terms[d]
            if d > 0 and ctl.is_small(terms[d], partial):
                small += 1
                if small >= ctl.consecutive_small:
                    return EvalResult(float(partial), 10.0 * abs(float(terms[d])),
                                      d + 1, METHOD_DIRECT)
            else:
                small = 0
        if size >= cap:
            raise ConvergenceError(f"double series did not converge within {cap} diagonals",
                                   best=float(partial), est_error=10.0 * abs(float(terms[-1])))
        size = min(2 * size, cap)


def f1_single_series(p: AppellParams, x: float, y: float,
                     ctl: SeriesControl = SeriesControl()) -> EvalResult:
    """Single series sum_k (alpha)_k (beta1)_k / ((gamma)_k k!) x^k
    * 2F1(alpha+k, beta2; gamma+k; y).

    The inner Gauss values share the constant excess gamma - alpha - beta2;
    when that vanishes and y is large they are computed one by one through
    the logarithmic expansion, otherwise as one cumulative-product matrix.
    """
    Point.series_domain(x, y)
    inner_excess = p.gamma - p.alpha - p.beta2
    inner_zb = abs(inner_excess) <= _ZB_EPS * max(1.0, abs(p.gamma))
    if inner_zb and y > 0.5:
        return _single_series_zb_inner(p, x, y, ctl)
    return _single_series_matrix(p, x, y, ctl)


def _single_series_zb_inner(p: AppellParams, x: float, y: float,
                            ctl: SeriesControl) -> EvalResult:
    coeff = 1.0
    partial = 0.0
    small = 0
    term = 0.0
    for k in range(ctl.max_terms):
        if k > 0:
            coeff *= (p.alpha + k - 1.0) * (p.beta1 + k - 1.0) / ((p.gamma + k - 1.0) * k) * x
        inner = zb_2f1_log_expansion(p.alpha + k, p.beta2, y, ctl)
        bk = beta(p.alpha + k, p.beta2)
        term = coeff * inner.value / bk
        partial += term
        if k > 0 and ctl.is_small(term, partial):
            small += 1
            if small >= ctl.consecutive_small:
                return EvalResult(partial, 10.0 * abs(term), k + 1, METHOD_DIRECT)
        else:
            small = 0
    raise ConvergenceError(f"single series did not converge in {ctl.max_terms} terms",
                           best=partial, est_error=10.0 * abs(term))


def _single_series_matrix(p: AppellParams, x: float, y: float,
                          ctl: SeriesControl) -> EvalResult:
    n_outer, n_inner = 128, 128
    cap = min(ctl.max_terms, 1 << 13)
    while True:
        a_col = _poch_power_row(p.beta2, y, n_inner)  # (beta2)_j y^j / j!
        k = np.arange(n_outer, dtype=float)[:, None]
        j = np.arange(1, n_inner, dtype=float)[None, :]
        ratios = (p.alpha + k + j - 1.0) / (p.gamma + k + j - 1.0)
        R = np.concatenate([np.ones((n_outer, 1)), np.cumprod(ratios, axis=1)], axis=1)
        inner_tail = np.max(np.abs(R[:, -1] * a_col[-1]))
        F = R @ a_col
        inner_ok = inner_tail <= ctl.rel_tol * max(np.min(np.abs(F)), 1e-30)
        outer = _poch_power_row(p.beta1, x, n_outer) \
            * np.concatenate(([1.0], np.cumprod((p.alpha + k[:-1, 0]) / (p.gamma + k[:-1, 0]))))
        terms = outer * F
        partial = 0.0
        small = 0
        done_at = None
        for i in range(n_outer):
            partial += terms[i]
            if i > 0 and ctl.is_small(terms[i], partial):
                small += 1
                if small >= ctl.consecutive_small:
                    done_at = i
                    break
            else:
                small = 0
        if done_at is not None and inner_ok:
            est = 10.0 * abs(float(terms[done_at])) + 10.0 * inner_tail / max(1e-30, 1.0 - abs(y))
            return EvalResult(float(partial), est, done_at + 1, METHOD_DIRECT)
        if done_at is None:
            n_outer = 2 * n_outer
        if not inner_ok:
            n_inner = 2 * n_inner
        if max(n_outer, n_inner) > cap:
            raise ConvergenceError(f"single series did not converge within a {cap} term budget",
                                   best=float(partial), est_error=abs(float(terms[-1])))


def f1_integral(p: AppellParams, x: float, y: float,
                qctl: QuadratureControl = QuadratureControl()) -> EvalResult:
    """Euler-type integral route, zero-balanced positive parameters only:

        F1 = (1/B(alpha, beta1+beta2)) * int_0^inf t^(alpha-1) (1+t)^(-alpha)
             (1+ut)^(-beta1) (1+vt)^(-beta2) dt,   u = 1-x, v = 1-y.
    """
    if not (p.zero_balanced and p.all_positive):
        raise DomainError("integral route requires zero-balanced positive parameters")
    if not (0.0 <= x < 1.0 and 0.0 <= y < 1.0):
        raise DomainError(f"integral route requires x, y in [0, 1), got ({x!r}, {y!r})")
    u = 1.0 - x
    v = 1.0 - y
    am1 = p.alpha - 1.0

    def integrand(t):
        t = np.asarray(t, dtype=float)
        return np.exp(am1 * np.log(t) - p.alpha * np.log1p(t)
                      - p.beta1 * np.log1p(u * t) - p.beta2 * np.log1p(v * t))

    splits = sorted({1.0, 1.0 / u, 1.0 / v})
    quad = integrate_semi_infinite(integrand, qctl, splits=splits)
    norm = beta(p.alpha, p.beta1 + p.beta2)
    value = quad.value / norm
    est = quad.est_error / norm + 1e-15 * abs(value)
    return EvalResult(value, est, quad.terms_used, METHOD_QUADRATURE)


def f1_transform_line(p: AppellParams, x: float, y: float):
    """Line transformation of a zero-balanced F1:

        F1(a; b1, b2; g; x, y) = ((1-y)/(1-x))^b1
                                 * F1(b1+b2; b1, a; g; (y-x)/(1-x), y).

    Returns (params, (x', y'), prefactor) of the right-hand side.
    """
    if not p.zero_balanced:
        raise DomainError("line transformation requires a zero-balanced parameter sum")
    Point.series_domain(x, y)
    w = (y - x) / (1.0 - x)
    if not abs(w) < 1.0:
        raise DomainError(f"transformed argument {w!r} leaves the series domain")
    pref = ((1.0 - y) / (1.0 - x)) ** p.beta1
    q = AppellParams(p.beta1 + p.beta2, p.beta1, p.alpha, p.gamma)
    return q, (w, y), pref


def f1_transform_inverse(p: AppellParams, x: float, y: float):
    """Argument-inversion transformation:

        F1(a; b1, b2; g; x, y) = u^(-b1) v^(-b2)
                                 * F1(g-a; b1, b2; g; 1-1/u, 1-1/v),
        u = 1-x, v = 1-y.

    Returns (params, (x', y'), prefactor); requires u, v > 1/2 so the
    transformed arguments stay inside the series domain.
    """
    if not p.gamma - p.alpha > 0.0:
        raise DomainError("requires gamma - alpha > 0")
    Point.series_domain(x, y)
    u = 1.0 - x
    v = 1.0 - y
    xp = 1.0 - 1.0 / u
    yp = 1.0 - 1.0 / v
    if not (abs(xp) < 1.0 and abs(yp) < 1.0):
        raise DomainError("transformed arguments leave the series domain; need x, y < 1/2")
    pref = u ** (-p.beta1) * v ** (-p.beta2)
    q = AppellParams(p.gamma - p.alpha, p.beta1, p.beta2, p.gamma)
    return q, (xp, yp), pref


def f1_eval(p: AppellParams, x: float, y: float,
            ctl: SeriesControl = SeriesControl(),
            qctl: QuadratureControl = QuadratureControl(),
            method: str = "auto",
            threshold: float = DISPATCH_THRESHOLD) -> EvalResult:
    """Evaluate F1 by the requested route, or dispatch on argument size:
    double series up to `threshold`, the integral for zero-balanced positive
    parameters beyond it, otherwise the single series after the line
    transformation has shrunk the leading argument.
    """
    if method == "double":
        return f1_double_series(p, x, y, ctl)
    if method == "single":
        return f1_single_series(p, x, y, ctl)
    if method == "integral":
        return f1_integral(p, x, y, qctl)
    if method != "auto":
        raise DomainError(f"unknown method {method!r}")
    if max(x, y) <= threshold:
        return f1_double_series(p, x, y, ctl)
    if p.zero_balanced and p.all_positive and max(x, y) < 1.0 and min(x, y) >= 0.0:
        return f1_integral(p, x, y, qctl)
    if p.zero_balanced:
        q, (xx, yy) = (p, (x, y))
        if yy < xx:
            q, (xx, yy) = q.swapped(), (yy, xx)
        q, (xp, yp), pref = f1_transform_line(q, xx, yy)
        inner = f1_single_series(q, xp, yp, ctl)
        return EvalResult(pref * inner.value,
                          pref * inner.est_error + 1e-15 * abs(pref * inner.value),
                          inner.terms_used, METHOD_TRANSFORMED)
    return f1_double_series(p, x, y, ctl)


def elliptic_f(lam: float, k: float,
               ctl: SeriesControl = SeriesControl(),
               qctl: QuadratureControl = QuadratureControl()) -> EvalResult:
    """Incomplete elliptic integral of the first kind, Appell form:

        F(lam, k) = lam * F1(1/2; 1/2, 1/2; 3/2; lam^2, k^2 lam^2),
        0 <= lam < 1, 0 <= k <= 1.

    k = 1 collapses along the diagonal to the closed form atanh(lam).
    """
    if not (0.0 <= lam < 1.0):
        raise DomainError(f"requires 0 <= lam < 1, got {lam!r}")
    if not (0.0 <= k <= 1.0):
        raise DomainError(f"requires 0 <= k <= 1, got {k!r}")
    if k == 1.0:
        value = math.atanh(lam)
        return EvalResult(value, 5e-16 * max(1.0, abs(value)), 1, METHOD_CLOSED)
    params = AppellParams(0.5, 0.5, 0.5, 1.5)
    inner = f1_eval(params, lam * lam, k * k * lam * lam, ctl, qctl)
    return EvalResult(lam * inner.value, lam * inner.est_error, inner.terms_used, inner.method)
