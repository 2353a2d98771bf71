"""Adaptive quadrature on finite and semi-infinite intervals.

The core rule is a nested Gauss-Legendre pair (10 and 21 points) on each
panel; the difference between the two estimates drives a global worst-panel
bisection loop.  All nodes are interior, so integrable endpoint singularities
are never evaluated, only resolved by subdivision.

Semi-infinite integrals over (0, inf) are mapped to (0, 1) with
t = s / (1 - s), dt = ds / (1 - s)^2.  The upper half of the unit interval is
handled in the reflected coordinate xi = 1 - s: float spacing near 1.0 is
about 1e-16, which would cap how deeply bisection can resolve a singularity
there, while near 0 panels can shrink without limit.
"""

import heapq
import math

import numpy as np

from .controls import METHOD_QUADRATURE, EvalResult, QuadratureControl
from .errors import ConvergenceError, DomainError

_NODES_LO, _WEIGHTS_LO = np.polynomial.legendre.leggauss(10)
_NODES_HI, _WEIGHTS_HI = np.polynomial.legendre.leggauss(21)


def _eval_vectorized(f, xs):
    ys = f(xs)
    ys = np.asarray(ys, dtype=float)
    if ys.shape != xs.shape:
        # Scalar-only integrand; fall back to pointwise evaluation.
        ys = np.array([float(f(float(x))) for x in xs])
    return ys


def _panel(f, a, b):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    y_lo = _eval_vectorized(f, mid + half * _NODES_LO)
    y_hi = _eval_vectorized(f, mid + half * _NODES_HI)
    if not (np.all(np.isfinite(y_lo)) and np.all(np.isfinite(y_hi))):
        raise DomainError(f"integrand returned non-finite values on ({a}, {b})")
    q_lo = half * float(_WEIGHTS_LO @ y_lo)
    q_hi = half * float(_WEIGHTS_HI @ y_hi)
    err = abs(q_hi - q_lo)
    return q_hi, err


def _integrate_panels(panels, ctl: QuadratureControl) -> EvalResult:
    """Global adaptive loop over (integrand, lo, hi) seed panels.

    Panels may carry different integrand closures, which lets callers place
    every known singularity at a panel's left endpoint in local coordinates.
    """
    heap = []  # entries (-err, seq, lo, hi, value, integrand)
    total = 0.0
    total_err = 0.0
    evals = 0
    seq = 0
    for f, lo, hi in panels:
        q, e = _panel(f, lo, hi)
        evals += 31
        total += q
        total_err += e
        heapq.heappush(heap, (-e, seq, lo, hi, q, f))
        seq += 1
    n_sub = 0
    while total_err > max(ctl.rel_tol * abs(total), ctl.abs_tol):
        if n_sub >= ctl.max_subdivisions:
            raise ConvergenceError(
                f"quadrature did not converge within {ctl.max_subdivisions} subdivisions",
                best=total, est_error=total_err)
        neg_e, _, lo, hi, q, f = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            # Panel is at floating-point resolution; accept its estimate.
            heapq.heappush(heap, (0.0, seq, lo, hi, q, f))
            seq += 1
            total_err += neg_e
            continue
        q1, e1 = _panel(f, lo, mid)
        q2, e2 = _panel(f, mid, hi)
        evals += 62
        total += q1 + q2 - q
        total_err += e1 + e2 + neg_e
        heapq.heappush(heap, (-e1, seq, lo, mid, q1, f))
        heapq.heappush(heap, (-e2, seq + 1, mid, hi, q2, f))
        seq += 2
        n_sub += 1
    return EvalResult(value=total, est_error=total_err, terms_used=evals,
                      method=METHOD_QUADRATURE)


def integrate_adaptive(f, a: float, b: float, ctl: QuadratureControl = QuadratureControl(),
                       splits=()) -> EvalResult:
    """Integrate f over the finite interval (a, b).

    splits: optional interior break points seeding the initial panels, useful
    when the caller knows where the integrand changes scale.
    """
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise DomainError(f"invalid interval ({a!r}, {b!r})")
    cuts = [a] + sorted(s for s in splits if a < s < b) + [b]
    return _integrate_panels([(f, lo, hi) for lo, hi in zip(cuts[:-1], cuts[1:])], ctl)


def integrate_semi_infinite(f, ctl: QuadratureControl = QuadratureControl(),
                            splits=()) -> EvalResult:
    """Integrate f over (0, inf).

    splits: optional break points in t-space marking known scale changes.
    """
    def lower(s):
        # s in (0, 1/2]: t = s/(1-s) in (0, 1]
        s = np.asarray(s, dtype=float)
        om = 1.0 - s
        return _eval_vectorized(f, s / om) / (om * om)

    def upper(xi):
        # xi = 1 - s in (0, 1/2]: t = 1/xi - 1 in [1, inf).  The jacobian is
        # applied in two steps so xi below 1e-154 cannot overflow while the
        # product stays representable.
        xi = np.asarray(xi, dtype=float)
        inv = 1.0 / xi
        return _eval_vectorized(f, inv - 1.0) * inv * inv

    s_splits = sorted(t / (1.0 + t) for t in splits if 0.0 < t < 1.0)
    xi_splits = sorted(1.0 / (1.0 + t) for t in splits
                       if t > 1.0 and math.isfinite(t))
    panels = []
    cuts = [0.0] + s_splits + [0.5]
    panels.extend((lower, lo, hi) for lo, hi in zip(cuts[:-1], cuts[1:]))
    cuts = [0.0] + xi_splits + [0.5]
    panels.extend((upper, lo, hi) for lo, hi in zip(cuts[:-1], cuts[1:]))
    return _integrate_panels(panels, ctl)
