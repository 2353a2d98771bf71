import math

import numpy as np
import pytest

from zbappell.controls import QuadratureControl
from zbappell.errors import ConvergenceError, DomainError
from zbappell.quadrature import integrate_adaptive, integrate_semi_infinite

CTL = QuadratureControl()


def test_polynomial_exact():
    res = integrate_adaptive(lambda t: 3.0 * t * t, 0.0, 1.0, CTL)
    assert res.value == pytest.approx(1.0, rel=1e-14)


def test_log_endpoint_singularity():
    # integral of ln(t) over (0,1] = -1; integrable singularity at 0
    res = integrate_adaptive(np.log, 0.0, 1.0, CTL)
    assert res.value == pytest.approx(-1.0, rel=1e-12)
    assert abs(res.value + 1.0) <= 10.0 * res.est_error + 1e-14


def test_inverse_sqrt_singularity():
    res = integrate_adaptive(lambda t: 1.0 / np.sqrt(t), 0.0, 1.0, CTL)
    assert res.value == pytest.approx(2.0, rel=1e-9)


def test_split_points_respected():
    # kink at t = 0.3 is invisible to the result when passed as a split
    def f(t):
        return np.where(t < 0.3, t, 0.3 + 2.0 * (t - 0.3))
    res = integrate_adaptive(f, 0.0, 1.0, CTL, splits=(0.3,))
    want = 0.5 * 0.3 ** 2 + 0.3 * 0.7 + (1.0 - 0.3) ** 2
    assert res.value == pytest.approx(want, rel=1e-13)


def test_semi_infinite_exponential():
    res = integrate_semi_infinite(lambda t: np.exp(-t), CTL)
    assert res.value == pytest.approx(1.0, rel=1e-12)


def test_semi_infinite_lorentzian_with_split():
    res = integrate_semi_infinite(lambda t: 1.0 / (1.0 + t * t), CTL, splits=(1.0, 10.0))
    assert res.value == pytest.approx(math.pi / 2.0, rel=1e-12)


def test_semi_infinite_gamma_integrand():
    # Gamma(3) = 2 through the two-patch mapping
    res = integrate_semi_infinite(lambda t: t * t * np.exp(-t), CTL)
    assert res.value == pytest.approx(2.0, rel=1e-12)


def test_nonfinite_integrand_rejected():
    with pytest.raises(DomainError):
        integrate_adaptive(lambda t: np.where(t > 0.25, 1.0, np.nan), 0.0, 1.0, CTL)


def test_budget_exhaustion_reports_best():
    tight = QuadratureControl(rel_tol=1e-15, max_subdivisions=3)
    with pytest.raises(ConvergenceError) as err:
        integrate_adaptive(lambda t: np.abs(np.sin(40.0 * t)) ** 0.3, 0.0, 1.0, tight)
    assert err.value.best is not None
    assert err.value.est_error > 0.0
