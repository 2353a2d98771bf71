"""Zero-balanced Appell function and its logarithmic corner approximation.

For positive a, b1, b2 put gamma = a + b1 + b2 (the zero-balanced case) and

    f(x, y) = B(a, b1+b2) * F1(a; b1, b2; gamma; x, y).

As (x, y) approaches the corner (1, 1), f grows logarithmically; the
approximation implemented here is

    g(x, y) = ln(1/(1-x)) + 2 psi(1) - psi(a) - psi(b1+b2)
              + tail(b2, b1+b2, w),           w = (y-x)/(1-x),

where tail(b, c, w) = sum_{k>=1} (b)_k w^k / ((c)_k k).  The remainder
f - g is always positive and bounded by r*(1 + a - a*ln(r)) with
r = (1-x)*b1 + (1-y)*b2, the rhombic distance to the corner.  The remainder
also equals a Mellin-type integral of two truncated kernels, computed
independently here as a cross-check.
"""

import math
from dataclasses import dataclass

import numpy as np

from .appell import AppellParams, f1_eval
from .controls import (METHOD_CLOSED, METHOD_DIRECT, METHOD_LOG,
                       METHOD_QUADRATURE, METHOD_TRANSFORMED, EvalResult,
                       QuadratureControl, SeriesControl)
from .errors import DomainError
from .hyp import (HypParams2F1, f2f1, f2f1_param_deriv, f2f1_tail,
                  f3f2_lemma_transform, zb_2f1_log_expansion)
from .quadrature import _integrate_panels, integrate_semi_infinite
from .scalar import beta, digamma, ramanujan_gamma

# Tail series terms decay like k^(-1-b1) for w -> 1, so beyond this switch
# point the tail is computed from its beta-log integral representation.
W_SWITCH = 0.75


@dataclass(frozen=True)
class Params:
    """Positive parameter triple (a, b1, b2); gamma = a + b1 + b2 implicitly."""

    a: float
    b1: float
    b2: float

    def __post_init__(self):
        if not (self.a > 0.0 and self.b1 > 0.0 and self.b2 > 0.0):
            raise DomainError(f"parameters must be positive, got {self!r}")

    @property
    def gamma(self) -> float:
        return self.a + self.b1 + self.b2

    def to_appell(self) -> AppellParams:
        return AppellParams(self.a, self.b1, self.b2, self.gamma)

    def swapped(self) -> "Params":
        return Params(self.a, self.b2, self.b1)


@dataclass(frozen=True)
class ApproxReport:
    """One point's evaluation of f, g, the remainder and its certificates.

    within_bound and positive are decided with a margin of 10x the combined
    evaluation error estimates so floating-point noise cannot flip them.
    """

    f_value: float
    g_value: float
    remainder: float
    remainder_integral: float
    bound: float
    rhombic_r: float
    within_bound: bool
    positive: bool


def f_zb(p: Params, x: float, y: float,
         ctl: SeriesControl = SeriesControl(),
         qctl: QuadratureControl = QuadratureControl()) -> EvalResult:
    """f(x, y) = B(a, b1+b2) * F1(a; b1, b2; a+b1+b2; x, y) on [0,1) x [0,1).

    Either argument may equal 1 (not both): there one variable drops out and
    f collapses to the one-variable zero-balanced Gauss value.
    """
    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
        raise DomainError(f"requires x, y in [0, 1], got ({x!r}, {y!r})")
    if x == 1.0 and y == 1.0:
        raise DomainError("f is singular at the corner x = y = 1")
    if y == 1.0:
        if x == 0.0:
            v = beta(p.a, p.b1)
            return EvalResult(v, 1e-15 * abs(v), 1, METHOD_CLOSED)
        return zb_2f1_log_expansion(p.a, p.b1, x, ctl)
    if x == 1.0:
        if y == 0.0:
            v = beta(p.a, p.b2)
            return EvalResult(v, 1e-15 * abs(v), 1, METHOD_CLOSED)
        return zb_2f1_log_expansion(p.a, p.b2, y, ctl)
    inner = f1_eval(p.to_appell(), x, y, ctl, qctl)
    b = beta(p.a, p.b1 + p.b2)
    value = b * inner.value
    return EvalResult(value, b * inner.est_error + 1e-15 * abs(value),
                      inner.terms_used, inner.method)


def _tail_beta_log_integral(b: float, cb: float, one_minus_w: float,
                            qctl: QuadratureControl) -> EvalResult:
    """tail(b, b+cb, w) from its integral representation

        tail = -(1/B(b, cb)) * int_0^1 t^(b-1) (1-t)^(cb-1) ln(1-w t) dt,

    uniform in the parameters and stable through w -> 1.  Both endpoint
    power singularities are flattened exactly by the substitutions
    t = tau^(1/b) and 1-t = sigma^(1/cb); the log factor near t = 1 is
    evaluated as ln((1-w) + w*(1-t)) so no cancellation occurs.
    """
    w = 1.0 - one_minus_w

    def left(tau):
        tau = np.asarray(tau, dtype=float)
        t = tau ** (1.0 / b)
        return (1.0 - t) ** (cb - 1.0) * np.log1p(-w * t) / b

    def right(sigma):
        sigma = np.asarray(sigma, dtype=float)
        xi = sigma ** (1.0 / cb)
        return (1.0 - xi) ** (b - 1.0) * np.log(one_minus_w + w * xi) / cb

    panels = [(left, 0.0, 0.5 ** b), (right, 0.0, 0.5 ** cb)]
    quad = _integrate_panels(panels, qctl)
    norm = beta(b, cb)
    value = -quad.value / norm
    return EvalResult(value, quad.est_error / norm + 1e-15 * abs(value),
                      quad.terms_used, METHOD_QUADRATURE)


def g_approx(p: Params, x: float, y: float,
             ctl: SeriesControl = SeriesControl(),
             qctl: QuadratureControl | None = None,
             use_symmetry: bool = True,
             w_switch: float = W_SWITCH) -> EvalResult:
    """The logarithmic approximation g on 0 <= x, y <= 1 minus the corner.

    The tail series argument w = (y-x)/(1-x) dispatches four ways: w = 0 and
    y = 1 are closed forms, 0 < w <= w_switch sums the series, w_switch < w
    < 1 integrates the beta-log representation.  Points with y < x evaluate
    through the symmetry g[a,b1,b2](x,y) = g[a,b2,b1](y,x); passing
    use_symmetry=False instead evaluates the negative-w tail directly
    through the argument transformation of the 3F2 relation, which is the
    independent second path the symmetry tests compare against.
    """
    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
        raise DomainError(f"requires x, y in [0, 1], got ({x!r}, {y!r})")
    if x == 1.0 and y == 1.0:
        raise DomainError("g is singular at the corner x = y = 1")
    if x == 1.0:
        if not use_symmetry:
            raise DomainError("x = 1 is reachable only through the symmetry route")
        return g_approx(p.swapped(), y, x, ctl, qctl, use_symmetry, w_switch)
    c = p.b1 + p.b2
    base = -math.log1p(-x) + ramanujan_gamma(p.a, c)
    base_est = 1e-15 * (abs(base) + 1.0)
    if y < x:
        if use_symmetry:
            return g_approx(p.swapped(), y, x, ctl, qctl, use_symmetry, w_switch)
        w = (y - x) / (1.0 - x)
        z = w / (w - 1.0)
        inner = f3f2_lemma_transform(1.0, p.b2 + 1.0, c + 1.0, z, ctl)
        scale = p.b2 * w / c
        return EvalResult(base + scale * inner.value,
                          base_est + abs(scale) * inner.est_error,
                          inner.terms_used, METHOD_TRANSFORMED)
    if y == x:
        return EvalResult(base, base_est, 1, METHOD_CLOSED)
    if y == 1.0:
        value = base + digamma(c) - digamma(p.b1)
        return EvalResult(value, base_est, 1, METHOD_CLOSED)
    w = (y - x) / (1.0 - x)
    if w <= w_switch:
        tail = f2f1_tail(p.b2, c, w, ctl)
        method = METHOD_DIRECT
    else:
        one_minus_w = (1.0 - y) / (1.0 - x)
        tail = _tail_beta_log_integral(p.b2, p.b1, one_minus_w,
                                       qctl or QuadratureControl(rel_tol=1e-13))
        method = METHOD_QUADRATURE
    return EvalResult(base + tail.value, base_est + tail.est_error,
                      tail.terms_used, method)


def remainder_bound(p: Params, x: float, y: float) -> float:
    """Certified remainder bound r*(1 + a - a*ln(r)), r the rhombic distance.

    Valid for every r > 0 (though only informative for small r); r = 0 is
    the excluded corner and returns 0.
    """
    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
        raise DomainError(f"requires x, y in [0, 1], got ({x!r}, {y!r})")
    r = (1.0 - x) * p.b1 + (1.0 - y) * p.b2
    if r == 0.0:
        return 0.0
    return r * (1.0 + p.a - p.a * math.log(r))


def kernel_f_trunc(a: float, t):
    """Truncated Mellin kernel t^(a-1) (1+t)^(-a) - 1/t, negative on (0, inf).

    Computed as expm1(-a*log1p(1/t))/t, which is exact in the same sense at
    every scale; the naive difference loses all digits as t grows.
    Accepts scalar or array t.
    """
    if not a > 0.0:
        raise DomainError(f"requires a > 0, got {a!r}")
    t_arr = np.asarray(t, dtype=float)
    if not np.all(t_arr > 0.0):
        raise DomainError("requires t > 0")
    out = np.expm1(-a * np.log1p(1.0 / t_arr)) / t_arr
    return float(out) if np.isscalar(t) or t_arr.ndim == 0 else out


def kernel_h_trunc(b1: float, b2: float, u: float, v: float, t):
    """Truncated kernel (1+tu)^(-b1) (1+tv)^(-b2) - 1, in (-1, 0] on (0, inf).

    Accepts scalar or array t.
    """
    if not (b1 > 0.0 and b2 > 0.0):
        raise DomainError(f"requires b1, b2 > 0, got {b1!r}, {b2!r}")
    if not (u >= 0.0 and v >= 0.0):
        raise DomainError(f"requires u, v >= 0, got {u!r}, {v!r}")
    t_arr = np.asarray(t, dtype=float)
    if not np.all(t_arr > 0.0):
        raise DomainError("requires t > 0")
    out = np.expm1(-b1 * np.log1p(u * t_arr) - b2 * np.log1p(v * t_arr))
    return float(out) if np.isscalar(t) or t_arr.ndim == 0 else out


def remainder_integral(p: Params, x: float, y: float,
                       qctl: QuadratureControl = QuadratureControl()) -> EvalResult:
    """The remainder f - g as the integral int_0^inf f_trunc(t) h_trunc(t) dt.

    The integrand is a product of two negative factors, hence positive; the
    initial panels split at t = 1 and t = 1/r following the integrand's
    scale changes.
    """
    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
        raise DomainError(f"requires x, y in [0, 1], got ({x!r}, {y!r})")
    u = 1.0 - x
    v = 1.0 - y
    if u == 0.0 and v == 0.0:
        return EvalResult(0.0, 0.0, 0, METHOD_CLOSED)

    def integrand(t):
        return kernel_f_trunc(p.a, t) * kernel_h_trunc(p.b1, p.b2, u, v, t)

    r = u * p.b1 + v * p.b2
    splits = sorted({1.0, 1.0 / r})
    return integrate_semi_infinite(integrand, qctl, splits=splits)


def rough_log(x: float, y: float) -> float:
    """First-order growth comparison ln(1/(1-xy)); f - rough_log stays O(1)."""
    if not x * y < 1.0:
        raise DomainError(f"requires x*y < 1, got ({x!r}, {y!r})")
    return -math.log1p(-x * y)


def _approx_bundle(p: Params, x: float, y: float,
                   ctl: SeriesControl, qctl: QuadratureControl):
    """ApproxReport plus the underlying EvalResults keyed f/g/integral."""
    f_res = f_zb(p, x, y, ctl, qctl)
    g_res = g_approx(p, x, y, ctl, qctl)
    ri = remainder_integral(p, x, y, qctl)
    remainder = f_res.value - g_res.value
    r = (1.0 - x) * p.b1 + (1.0 - y) * p.b2
    bound = remainder_bound(p, x, y)
    margin = 10.0 * (f_res.est_error + g_res.est_error)
    report = ApproxReport(
        f_value=f_res.value,
        g_value=g_res.value,
        remainder=remainder,
        remainder_integral=ri.value,
        bound=bound,
        rhombic_r=r,
        within_bound=(remainder > -margin) and (remainder < bound + margin),
        positive=remainder > -margin,
    )
    return report, {"f": f_res, "g": g_res, "integral": ri}


def approx_report(p: Params, x: float, y: float,
                  ctl: SeriesControl = SeriesControl(),
                  qctl: QuadratureControl = QuadratureControl()) -> ApproxReport:
    """Evaluate f, g, the remainder, its integral form and the certified
    bound at one point; any failed sub-evaluation propagates as an exception
    rather than producing a partial report.
    """
    return _approx_bundle(p, x, y, ctl, qctl)[0]


def log_expansion_series(p: Params, x: float, y: float, n_terms: int,
                         ctl: SeriesControl = SeriesControl()) -> EvalResult:
    """Partial sum of the full logarithmic corner expansion of f:

        ((1-y)/(1-x))^b1 * sum_n ((a)_n (c)_n / (n!)^2) (1-y)^n
            * [A_n * 2F1(c+n, b1; c; w) - 2F1'(c+n, b1; c; w)],

    c = b1+b2, w = (y-x)/(1-x), A_n = ln(1/(1-y)) + 2 psi(n+1) - psi(a+n)
    - psi(c+n), and 2F1' the derivative in the first parameter.  The n = 0
    term alone reproduces g exactly; successive terms improve the
    approximation by powers of (1-y).  Points with y < x evaluate the
    swapped-parameter expansion (the two agree by symmetry of f).

    est_error covers the numerical error of the computed terms, not the
    truncation after n_terms.
    """
    if n_terms < 1:
        raise DomainError(f"n_terms must be >= 1, got {n_terms!r}")
    if not (0.0 <= x < 1.0 and 0.0 < y < 1.0):
        raise DomainError(f"requires 0 <= x < 1 and 0 < y < 1, got ({x!r}, {y!r})")
    if y < x:
        return log_expansion_series(p.swapped(), y, x, n_terms, ctl)
    c = p.b1 + p.b2
    u = 1.0 - x
    v = 1.0 - y
    w = (y - x) / u
    a_n = -math.log(v) + ramanujan_gamma(p.a, c)
    coeff = 1.0
    v_pow = 1.0
    partial = 0.0
    est = 0.0
    evals = 0
    for n in range(n_terms):
        if n > 0:
            coeff *= (p.a + n - 1.0) * (c + n - 1.0) / (n * n)
            v_pow *= v
            a_n += 2.0 / n - 1.0 / (p.a + n - 1.0) - 1.0 / (c + n - 1.0)
        params = HypParams2F1(c + n, p.b1, c)
        fn = f2f1(params, w, ctl)
        fpn = f2f1_param_deriv(params, w, ctl)
        term = coeff * v_pow * (a_n * fn.value - fpn.value)
        partial += term
        est += abs(coeff * v_pow) * (abs(a_n) * fn.est_error + fpn.est_error) \
            + 1e-16 * abs(term)
        evals += fn.terms_used + fpn.terms_used
    pref = (v / u) ** p.b1
    return EvalResult(pref * partial, pref * est + 1e-15 * abs(pref * partial),
                      evals, METHOD_LOG)
