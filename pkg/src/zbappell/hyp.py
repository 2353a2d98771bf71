"""Gauss and generalized hypergeometric machinery.

Everything here is real-argument, series-first: a generic pFq summation with
an explicit stop rule, a region-dispatching 2F1 front end, the zero-balanced
logarithmic expansion, and the family of 3F2 relations (argument transform,
collapse to 2F1, unit-argument closed form, Carlson-Gustafson special case)
that the corner approximation is assembled from.
"""

import math
from dataclasses import dataclass

from .controls import (METHOD_CLOSED, METHOD_DIRECT, METHOD_LOG,
                       METHOD_TRANSFORMED, EvalResult, SeriesControl)
from .errors import ConvergenceError, DegenerateParameterError, DomainError
from .scalar import (EULER_GAMMA, beta, digamma, ln_gamma, ramanujan_gamma,
                     trigamma)

_ZB_EPS = 1e-14  # tolerance for detecting a zero-balanced parameter sum


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and x == math.floor(x)


@dataclass(frozen=True)
class HypParams2F1:
    a: float
    b: float
    c: float

    def __post_init__(self):
        if _is_nonpositive_integer(self.c):
            raise DegenerateParameterError(f"2F1 lower parameter c={self.c!r} is a non-positive integer")

    @property
    def excess(self) -> float:
        return self.c - self.a - self.b

    @property
    def zero_balanced(self) -> bool:
        return abs(self.excess) <= _ZB_EPS * max(1.0, abs(self.c))


@dataclass(frozen=True)
class HypParams3F2:
    a1: float
    a2: float
    a3: float
    b1: float
    b2: float

    def __post_init__(self):
        for name in ("b1", "b2"):
            v = getattr(self, name)
            if _is_nonpositive_integer(v):
                raise DegenerateParameterError(f"3F2 lower parameter {name}={v!r} is a non-positive integer")

    @property
    def excess(self) -> float:
        return self.b1 + self.b2 - self.a1 - self.a2 - self.a3

    @property
    def zero_balanced(self) -> bool:
        s = abs(self.b1) + abs(self.b2)
        return abs(self.excess) <= _ZB_EPS * max(1.0, s)


def pfq_series(num, den, z: float, ctl: SeriesControl = SeriesControl()) -> EvalResult:
    """Direct summation of pFq(num; den; z) with the shared stop rule.

    p <= q+1 only; for p = q+1 the series requires |z| < 1, or z = 1 with a
    positive parameter excess.
    """
    num = tuple(float(a) for a in num)
    den = tuple(float(b) for b in den)
    for b in den:
        if _is_nonpositive_integer(b):
            raise DegenerateParameterError(f"lower parameter {b!r} is a non-positive integer")
    if z == 0.0:
        return EvalResult(1.0, 0.0, 1, METHOD_DIRECT)
    if len(num) > len(den) + 1:
        raise DomainError("series diverges: more upper than lower parameters plus one")
    if len(num) == len(den) + 1:
        if abs(z) > 1.0:
            raise DomainError(f"series diverges for |z| = {abs(z)!r} > 1")
        if abs(z) == 1.0:
            excess = sum(den) - sum(num)
            if not (z == 1.0 and excess > 0.0):
                raise DomainError("series does not converge at |z| = 1 for these parameters")
            return _unit_argument_series(num, den, excess, ctl)
    term = 1.0
    partial = 1.0
    small = 0
    for k in range(ctl.max_terms):
        ratio = z / (k + 1.0)
        for a in num:
            ratio *= a + k
        for b in den:
            ratio /= b + k
        term *= ratio
        partial += term
        if ctl.is_small(term, partial):
            small += 1
            if small >= ctl.consecutive_small:
                return EvalResult(partial, 10.0 * abs(term), k + 2, METHOD_DIRECT)
        else:
            small = 0
    raise ConvergenceError(f"pFq series did not converge in {ctl.max_terms} terms",
                           best=partial, est_error=10.0 * abs(term))


def _unit_argument_series(num, den, excess: float, ctl: SeriesControl) -> EvalResult:
    """pFq at z = 1 with positive excess.

    The Gauss function gets its exact closed form.  Higher orders are summed
    directly; terms there decay only like k^-(1+excess), so when the budget
    runs out under smooth positive decay the remainder is replaced by its
    integral estimate and the reported error is inflated accordingly.
    """
    if len(num) == 2:
        c = den[0]
        if c > 0.0 and c - num[0] > 0.0 and c - num[1] > 0.0:
            value = math.exp(ln_gamma(c) + ln_gamma(excess)
                             - ln_gamma(c - num[0]) - ln_gamma(c - num[1]))
            return EvalResult(value, 1e-15 * abs(value), 1, METHOD_CLOSED)
    term = 1.0
    partial = 1.0
    small = 0
    ratio = 1.0
    budget = min(ctl.max_terms, 20000)
    for k in range(budget):
        ratio = 1.0 / (k + 1.0)
        for a in num:
            ratio *= a + k
        for b in den:
            ratio /= b + k
        term *= ratio
        partial += term
        if ctl.is_small(term, partial):
            small += 1
            if small >= ctl.consecutive_small:
                return EvalResult(partial, 10.0 * abs(term), k + 2, METHOD_DIRECT)
        else:
            small = 0
    if not (term > 0.0 and 0.0 < ratio < 1.0):
        raise ConvergenceError(f"unit-argument series is not smoothly decaying after {budget} terms",
                               best=partial, est_error=10.0 * abs(term))
    s = 1.0 + excess
    tail = term * budget ** s * (budget + 0.5) ** (1.0 - s) / (s - 1.0)
    est = abs(tail) * 50.0 / budget + 10.0 * abs(term) / budget
    return EvalResult(partial + tail, est, budget + 1, METHOD_DIRECT)


def zb_2f1_log_expansion(a: float, b: float, z: float,
                         ctl: SeriesControl = SeriesControl(),
                         one_minus_z: float | None = None) -> EvalResult:
    """Beta-weighted zero-balanced Gauss function by its logarithmic expansion.

    Returns B(a,b) * 2F1(a,b; a+b; z) summed as
        sum_n ((a)_n (b)_n / (n!)^2) * [2 psi(n+1) - psi(a+n) - psi(b+n)
                                        - ln(1-z)] * (1-z)^n,
    which converges geometrically for z in (0, 1) and is the accurate route
    near the logarithmic singularity at z = 1.
    """
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"parameters must be positive, got {a!r}, {b!r}")
    u = 1.0 - z if one_minus_z is None else one_minus_z
    if not (0.0 < u < 1.0):
        raise DomainError(f"requires z in (0, 1), got z={z!r}")
    log_term = -math.log(u)
    coeff = 1.0
    psi_n1 = -EULER_GAMMA
    psi_an = digamma(a)
    psi_bn = digamma(b)
    un = 1.0
    partial = 0.0
    small = 0
    term = 0.0
    for n in range(ctl.max_terms):
        term = coeff * un * (log_term + 2.0 * psi_n1 - psi_an - psi_bn)
        partial += term
        if ctl.is_small(term, partial):
            small += 1
            if small >= ctl.consecutive_small:
                return EvalResult(partial, 10.0 * abs(term), n + 1, METHOD_LOG)
        else:
            small = 0
        coeff *= (a + n) * (b + n) / ((n + 1.0) * (n + 1.0))
        un *= u
        psi_n1 += 1.0 / (n + 1.0)
        psi_an += 1.0 / (a + n)
        psi_bn += 1.0 / (b + n)
    raise ConvergenceError(f"log expansion did not converge in {ctl.max_terms} terms",
                           best=partial, est_error=10.0 * abs(term))


def f2f1(p: HypParams2F1, z: float, ctl: SeriesControl = SeriesControl()) -> EvalResult:
    """Gauss 2F1(a,b;c;z) for real z < 1 with region dispatch.

    [0, 1/2]: direct series.  (1/2, 1): the zero-balanced logarithmic
    expansion when c = a+b, else the Euler transformation when it improves
    convergence.  z < 0: Pfaff transformation onto (0, 1).
    """
    if not z < 1.0:
        raise DomainError(f"f2f1 requires z < 1, got {z!r}")
    if z < 0.0:
        inner = f2f1(HypParams2F1(p.a, p.c - p.b, p.c), z / (z - 1.0), ctl)
        pref = (1.0 - z) ** (-p.a)
        return EvalResult(pref * inner.value, pref * inner.est_error + 1e-16 * abs(pref * inner.value),
                          inner.terms_used, METHOD_TRANSFORMED)
    if z > 0.5:
        if p.zero_balanced:
            inner = zb_2f1_log_expansion(p.a, p.b, z, ctl)
            bab = beta(p.a, p.b)
            return EvalResult(inner.value / bab, inner.est_error / bab + 1e-16 * abs(inner.value / bab),
                              inner.terms_used, METHOD_LOG)
        if p.excess < 0.0:
            # Euler transformation turns growing coefficients into decaying ones.
            inner = pfq_series((p.c - p.a, p.c - p.b), (p.c,), z, ctl)
            pref = (1.0 - z) ** p.excess
            return EvalResult(pref * inner.value, pref * inner.est_error + 1e-16 * abs(pref * inner.value),
                              inner.terms_used, METHOD_TRANSFORMED)
    return pfq_series((p.a, p.b), (p.c,), z, ctl)


def ramanujan_2f1_approx(a: float, b: float, x: float) -> float:
    """Logarithmic asymptote of B(a,b)*2F1(a,b;a+b;x) near x = 1."""
    if not (0.0 <= x < 1.0):
        raise DomainError(f"requires x in [0, 1), got {x!r}")
    return -math.log1p(-x) + ramanujan_gamma(a, b)


def zb_3f2_constant_L(p: HypParams3F2, ctl: SeriesControl = SeriesControl()) -> EvalResult:
    """Additive constant of the zero-balanced 3F2 logarithmic asymptote.

    L = 2 psi(1) - psi(a1) - psi(a2)
        + sum_{k>=1} (b2-a3)_k (b1-a3)_k / (k (a1)_k (a2)_k).

    The correction series decays like k^(-1-a3); when the term budget runs out
    before the stop rule triggers, the integral tail estimate for that decay
    is added and folded into est_error.
    """
    if not (p.a1 > 0 and p.a2 > 0 and p.a3 > 0):
        raise DomainError("upper parameters must be positive")
    if not p.zero_balanced:
        raise DomainError("parameter sums must balance")
    base = -2.0 * EULER_GAMMA - digamma(p.a1) - digamma(p.a2)
    c1 = p.b2 - p.a3
    c2 = p.b1 - p.a3
    if c1 == 0.0 or c2 == 0.0:
        return EvalResult(base, 1e-15 * max(1.0, abs(base)), 1, METHOD_CLOSED)
    poch_ratio = 1.0
    partial = base
    small = 0
    term = 0.0
    prev = 0.0
    for k in range(1, ctl.max_terms + 1):
        poch_ratio *= (c1 + k - 1.0) * (c2 + k - 1.0) / ((p.a1 + k - 1.0) * (p.a2 + k - 1.0))
        prev = term
        term = poch_ratio / k
        partial += term
        if ctl.is_small(term, partial):
            small += 1
            if small >= ctl.consecutive_small:
                return EvalResult(partial, 10.0 * abs(term), k + 1, METHOD_DIRECT)
        else:
            small = 0
    # Smoothly decaying positive tail: add the power-law integral estimate.
    k_last = float(ctl.max_terms)
    if prev != 0.0 and term != 0.0 and 0.0 < term / prev < 1.0:
        s = 1.0 + p.a3
        tail = term * (k_last ** s) * ((k_last + 0.5) ** (1.0 - s)) / (s - 1.0)
        est = abs(tail) * (50.0 / k_last) + 10.0 * abs(term) / k_last
        if est <= 1e-6 * max(1.0, abs(partial + tail)):
            return EvalResult(partial + tail, est, ctl.max_terms + 1, METHOD_DIRECT)
    raise ConvergenceError(f"constant series did not converge in {ctl.max_terms} terms",
                           best=partial, est_error=10.0 * abs(term))


def f3f2(p: HypParams3F2, z: float, ctl: SeriesControl = SeriesControl()) -> EvalResult:
    """3F2(a1,a2,a3; b1,b2; z) for real z in (-1, 1].

    At z = 1 the (1,1,c; 2,e) pattern uses the closed form; anything else
    falls back to the direct series under its convergence condition.
    """
    if z == 1.0:
        uppers = [p.a1, p.a2, p.a3]
        lowers = [p.b1, p.b2]
        if uppers.count(1.0) >= 2 and 2.0 in lowers:
            rest = list(uppers)
            rest.remove(1.0)
            rest.remove(1.0)
            lo = list(lowers)
            lo.remove(2.0)
            return f3f2_unit(rest[0], lo[0])
    return pfq_series((p.a1, p.a2, p.a3), (p.b1, p.b2), z, ctl)


def f3f2_unit(c: float, e: float) -> EvalResult:
    """Closed form for 3F2(1,1,c; 2,e; 1) = ((e-1)/(c-1)) (psi(e-1) - psi(e-c)).

    c = 1 returns the continuous limit (e-1) * psi'(e-1).
    """
    if not e > 1.0:
        raise DomainError(f"requires e > 1, got {e!r}")
    if not e - c > 0.0:
        raise DomainError(f"requires e - c > 0 for convergence, got c={c!r}, e={e!r}")
    if c == 1.0:
        value = (e - 1.0) * trigamma(e - 1.0)
    else:
        value = (e - 1.0) / (c - 1.0) * (digamma(e - 1.0) - digamma(e - c))
    return EvalResult(value, 1e-14 * max(1.0, abs(value)), 1, METHOD_CLOSED)


def f3f2_special_cg(z: float, ctl: SeriesControl = SeriesControl()) -> EvalResult:
    """Carlson-Gustafson closed form 3F2(1,1,3/2; 2,2; z) = -(4/z) ln((1+sqrt(1-z))/2).

    Valid for z <= 1; written via expm1/log1p so small |z| loses no digits.
    """
    if z > 1.0:
        raise DomainError(f"requires z <= 1, got {z!r}")
    if z == 0.0:
        return EvalResult(1.0, 0.0, 1, METHOD_CLOSED)
    if z == 1.0:
        value = 4.0 * math.log(2.0)
        return EvalResult(value, 5e-16 * value, 1, METHOD_CLOSED)
    sqrt_m1 = math.expm1(0.5 * math.log1p(-z))  # sqrt(1-z) - 1
    value = -4.0 / z * math.log1p(0.5 * sqrt_m1)
    return EvalResult(value, 5e-16 * abs(value), 1, METHOD_CLOSED)


def f2f1_param_deriv(p: HypParams2F1, z: float, ctl: SeriesControl = SeriesControl()) -> EvalResult:
    """Derivative of 2F1(a,b;c;z) with respect to the first upper parameter.

    Summed as sum_k [psi(a+k) - psi(a)] (a)_k (b)_k z^k / ((c)_k k!) with the
    digamma difference accumulated as a harmonic-type sum.  a = 0 dispatches
    to the exact limit series f2f1_tail.
    """
    if not abs(z) < 1.0:
        raise DomainError(f"requires |z| < 1, got {z!r}")
    if p.a == 0.0:
        return f2f1_tail(p.b, p.c, z, ctl)
    if _is_nonpositive_integer(p.a):
        raise DegenerateParameterError(f"derivative undefined at non-positive integer a={p.a!r}")
    if z == 0.0:
        return EvalResult(0.0, 0.0, 1, METHOD_DIRECT)
    poch = 1.0
    dsum = 0.0
    partial = 0.0
    small = 0
    term = 0.0
    for k in range(ctl.max_terms):
        if k > 0:
            poch *= (p.a + k - 1.0) * (p.b + k - 1.0) / ((p.c + k - 1.0) * k) * z
            dsum += 1.0 / (p.a + k - 1.0)
        term = dsum * poch
        partial += term
        if k > 0 and ctl.is_small(term, partial):
            small += 1
            if small >= ctl.consecutive_small:
                return EvalResult(partial, 10.0 * abs(term), k + 1, METHOD_DIRECT)
        else:
            small = 0
    raise ConvergenceError(f"parameter-derivative series did not converge in {ctl.max_terms} terms",
                           best=partial, est_error=10.0 * abs(term))


def f2f1_tail(b: float, c: float, z: float, ctl: SeriesControl = SeriesControl()) -> EvalResult:
    """Logarithmic tail series sum_{k>=1} (b)_k z^k / ((c)_k k) for z in (-1, 1].

    Equals (bz/c) 3F2(1,1,b+1; 2,c+1; z) and the a-derivative of 2F1(a,b;c;z)
    at a = 0.  At z = 1 (requires c > b) the closed value psi(c) - psi(c-b)
    is returned.
    """
    if not (-1.0 < z <= 1.0):
        raise DomainError(f"requires z in (-1, 1], got {z!r}")
    if z == 1.0:
        if not c - b > 0.0:
            raise DomainError(f"tail diverges at z = 1 unless c > b, got b={b!r}, c={c!r}")
        value = digamma(c) - digamma(c - b)
        return EvalResult(value, 1e-14 * max(1.0, abs(value)), 1, METHOD_CLOSED)
    if _is_nonpositive_integer(c):
        raise DegenerateParameterError(f"lower parameter c={c!r} is a non-positive integer")
    if z == 0.0:
        return EvalResult(0.0, 0.0, 1, METHOD_DIRECT)
    poch = 1.0
    partial = 0.0
    small = 0
    term = 0.0
    for k in range(1, ctl.max_terms + 1):
        poch *= (b + k - 1.0) / ((c + k - 1.0)) * z
        term = poch / k
        partial += term
        if ctl.is_small(term, partial):
            small += 1
            if small >= ctl.consecutive_small:
                return EvalResult(partial, 10.0 * abs(term), k, METHOD_DIRECT)
        else:
            small = 0
    raise ConvergenceError(f"tail series did not converge in {ctl.max_terms} terms",
                           best=partial, est_error=10.0 * abs(term))


def f3f2_lemma_transform(b: float, c: float, e: float, z: float,
                         ctl: SeriesControl = SeriesControl()) -> EvalResult:
    """3F2(1,b,c; 2,e; z/(z-1)) computed from series at argument z in (0, 1).

    This is the stable route to the negative-axis 3F2 values: the mapped
    argument z/(z-1) covers (-inf, 0).  b = 1 uses the logarithmic form of
    the relation; otherwise the general power form applies, with the
    (1 - (1-z)^(b-1))/(b-1) factor evaluated through expm1 so b near 1 stays
    accurate.
    """
    if not (0.0 < z < 1.0):
        raise DomainError(f"requires z in (0, 1), got {z!r}")
    if c == 1.0:
        raise DegenerateParameterError("c = 1 degenerates the relation")
    inner = f3f2(HypParams3F2(1.0, b, e - c + 1.0, 2.0, e), z, ctl)
    omz = 1.0 - z
    if b == 1.0:
        first = (z - 1.0) * (e - c) / (c - 1.0) * inner.value
        second = (e - 1.0) * omz / ((c - 1.0) * z) * (-math.log1p(-z))
        scale = abs(z - 1.0) * abs((e - c) / (c - 1.0))
    else:
        first = (omz ** b) * (c - e) / (c - 1.0) * inner.value
        ratio = -math.expm1((b - 1.0) * math.log1p(-z)) / (b - 1.0)
        second = (e - 1.0) * omz * ratio / ((c - 1.0) * z)
        scale = (omz ** b) * abs((c - e) / (c - 1.0))
    value = first + second
    est = scale * inner.est_error + 1e-15 * (abs(first) + abs(second))
    return EvalResult(value, est, inner.terms_used, METHOD_TRANSFORMED)


def f3f2_to_2f1(b: float, c: float, e: float, z: float,
                ctl: SeriesControl = SeriesControl()) -> EvalResult:
    """Collapse 3F2(1,b,c; 2,e; z) = ((e-1)/((b-1)(c-1)z)) [2F1(b-1,c-1;e-1;z) - 1].

    Small |z| (< 1e-4) is summed directly instead: the bracketed difference
    loses all leading digits there.
    """
    if b == 1.0 or c == 1.0:
        raise DegenerateParameterError("b = 1 or c = 1 degenerates the collapse")
    if not z < 1.0:
        raise DomainError(f"requires z < 1, got {z!r}")
    if abs(z) < 1e-4:
        return pfq_series((1.0, b, c), (2.0, e), z, ctl)
    inner = f2f1(HypParams2F1(b - 1.0, c - 1.0, e - 1.0), z, ctl)
    pref = (e - 1.0) / ((b - 1.0) * (c - 1.0) * z)
    value = pref * (inner.value - 1.0)
    est = abs(pref) * (inner.est_error + 2e-16 * max(1.0, abs(inner.value)))
    return EvalResult(value, est, inner.terms_used, METHOD_TRANSFORMED)
