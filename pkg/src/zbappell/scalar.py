"""Gamma-family scalar functions used by every higher layer.

All functions are plain float -> float with explicit domain checks.  Accuracy
targets: ln_gamma and digamma better than 1e-13 relative/absolute on the
working range (0, 1e6]; everything downstream budgets against that.
"""

import math

from .errors import DomainError

EULER_GAMMA = 0.5772156649015328606065

# Lanczos approximation, g = 7, 9 terms.  Relative error below 1e-14 on the
# positive real axis.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# Asymptotic tail coefficients -B_{2n}/(2n) for digamma, applied as
# c[n] * x^(-2n-2) after ln(x) - 1/(2x).
_DIGAMMA_TAIL = (
    -1.0 / 12.0,
    1.0 / 120.0,
    -1.0 / 252.0,
    1.0 / 240.0,
    -1.0 / 132.0,
    691.0 / 32760.0,
    -1.0 / 12.0,
)

# Asymptotic tail coefficients B_{2n} for trigamma, applied as
# c[n] * x^(-2n-3) after 1/x + 1/(2x^2).
_TRIGAMMA_TAIL = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)

_ASYMPTOTIC_CUT = 10.0


def ln_gamma(x: float) -> float:
    """Natural log of the gamma function for x > 0."""
    if not (x > 0.0) or math.isinf(x) or math.isnan(x):
        raise DomainError(f"ln_gamma requires x > 0, got {x!r}")
    if x < 0.5:
        # Reflection keeps the Lanczos sum in its accurate range.
        return math.log(math.pi / math.sin(math.pi * x)) - ln_gamma(1.0 - x)
    xm = x - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += c / (xm + i)
    t = xm + _LANCZOS_G + 0.5
    return 0.5 * math.log(2.0 * math.pi) + (xm + 0.5) * math.log(t) - t + math.log(acc)


def digamma(x: float) -> float:
    """Logarithmic derivative of gamma for x > 0.

    Upward recurrence pushes the argument past 10, then the Bernoulli
    asymptotic series finishes the job.
    """
    if not (x > 0.0) or math.isinf(x) or math.isnan(x):
        raise DomainError(f"digamma requires x > 0, got {x!r}")
    acc = 0.0
    while x < _ASYMPTOTIC_CUT:
        acc -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    p = inv2
    for c in _DIGAMMA_TAIL:
        tail += c * p
        p *= inv2
    return acc + math.log(x) - 0.5 / x + tail


def trigamma(x: float) -> float:
    """Second log-derivative of gamma for x > 0 (same scheme as digamma)."""
    if not (x > 0.0) or math.isinf(x) or math.isnan(x):
        raise DomainError(f"trigamma requires x > 0, got {x!r}")
    acc = 0.0
    while x < _ASYMPTOTIC_CUT:
        acc += 1.0 / (x * x)
        x += 1.0
    inv2 = 1.0 / (x * x)
    tail = 0.0
    p = inv2 / x
    for c in _TRIGAMMA_TAIL:
        tail += c * p
        p *= inv2
    return acc + 1.0 / x + 0.5 * inv2 + tail


def beta(a: float, b: float) -> float:
    """Euler beta function for a, b > 0."""
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"beta requires positive arguments, got {a!r}, {b!r}")
    return math.exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b))


def pochhammer(x: float, n: int) -> float:
    """Rising factorial (x)_n for integer n >= 0.

    Direct product for short runs; gamma ratio for long positive runs so the
    cost stays O(1).
    """
    if n < 0 or n != int(n):
        raise DomainError(f"pochhammer requires integer n >= 0, got {n!r}")
    n = int(n)
    if n == 0:
        return 1.0
    if n <= 256 or x <= 0.0:
        acc = 1.0
        for i in range(n):
            acc *= x + i
        return acc
    return math.exp(ln_gamma(x + n) - ln_gamma(x))


def ramanujan_gamma(a: float, b: float) -> float:
    """Additive constant 2*psi(1) - psi(a) - psi(b) of the zero-balanced
    logarithmic asymptote."""
    return -2.0 * EULER_GAMMA - digamma(a) - digamma(b)
