import math

import numpy as np
import pytest

from zbappell.appell import (AppellParams, Point, elliptic_f, f1_double_series,
                             f1_eval, f1_integral, f1_single_series,
                             f1_transform_inverse, f1_transform_line)
from zbappell.controls import (METHOD_DIRECT, METHOD_QUADRATURE,
                               METHOD_TRANSFORMED, QuadratureControl,
                               SeriesControl)
from zbappell.errors import DomainError
from zbappell.hyp import HypParams2F1, f2f1

CTL = SeriesControl()
QCTL = QuadratureControl()

# 30-digit frozen references
F1_CASES = [
    (0.5, 0.5, 0.5, 1.5, 0.25, 0.64, 1.2214411832200894),
    (2.0, 0.5, 1.0, 3.5, 0.3, 0.6, 1.7719554499241115),
    (1.0, 0.3, 1.7, 3.0, 0.8, 0.4, 1.4954388359371652),
]


@pytest.mark.parametrize("al,b1,b2,ga,x,y,want", F1_CASES)
def test_f1_reference_values(al, b1, b2, ga, x, y, want):
    res = f1_eval(AppellParams(al, b1, b2, ga), x, y, CTL, QCTL)
    assert res.value == pytest.approx(want, rel=1e-12)


def test_params_reject_gamma_pole():
    with pytest.raises(DomainError):
        AppellParams(1.0, 0.5, 0.5, 0.0)
    with pytest.raises(DomainError):
        AppellParams(1.0, 0.5, 0.5, -2.0)


def test_point_derived_quantities():
    pt = Point(0.2, 0.6)
    assert pt.u == pytest.approx(0.8)
    assert pt.v == pytest.approx(0.4)
    assert pt.w == pytest.approx((0.6 - 0.2) / 0.8)
    assert pt.rhombic_r(0.5, 0.25) == pytest.approx(0.8 * 0.5 + 0.4 * 0.25)


def test_permutation_symmetry():
    p = AppellParams(0.7, 0.4, 1.1, 2.9)
    q = AppellParams(0.7, 1.1, 0.4, 2.9)
    a = f1_double_series(p, 0.3, 0.55, CTL).value
    b = f1_double_series(q, 0.55, 0.3, CTL).value
    assert a == pytest.approx(b, rel=1e-13)


def test_diagonal_collapses_to_gauss():
    p = AppellParams(0.8, 0.6, 0.9, 2.5)
    got = f1_double_series(p, 0.45, 0.45, CTL).value
    want = f2f1(HypParams2F1(0.8, 1.5, 2.5), 0.45).value
    assert got == pytest.approx(want, rel=1e-13)


def test_three_routes_agree_zero_balanced():
    p = AppellParams(0.5, 0.5, 0.5, 1.5)
    x, y = 0.35, 0.6
    d = f1_double_series(p, x, y, CTL)
    s = f1_single_series(p, x, y, CTL)
    q = f1_integral(p, x, y, QCTL)
    assert s.value == pytest.approx(d.value, rel=1e-11)
    assert q.value == pytest.approx(d.value, rel=1e-11)


def test_line_transform_is_an_identity():
    p = AppellParams(0.5, 0.5, 0.5, 1.5)
    x, y = 0.3, 0.7
    q, (wx, wy), scale = f1_transform_line(p, x, y)
    lhs = f1_double_series(p, x, y, CTL).value
    rhs = scale * f1_double_series(q, wx, wy, CTL).value
    assert lhs == pytest.approx(rhs, rel=1e-12)


def test_inverse_transform_is_an_identity():
    # maps (x, y) to negative arguments x/(x-1), y/(y-1); identity below 1/2
    p = AppellParams(0.6, 0.4, 0.7, 2.2)
    x, y = 0.3, 0.45
    q, (ix, iy), scale = f1_transform_inverse(p, x, y)
    assert ix < 0.0 and iy < 0.0
    lhs = f1_double_series(p, x, y, CTL).value
    rhs = scale * f1_double_series(q, ix, iy, CTL).value
    assert lhs == pytest.approx(rhs, rel=1e-11)


def test_explicit_method_routing():
    p = AppellParams(0.5, 0.5, 0.5, 1.5)
    assert f1_eval(p, 0.2, 0.4, CTL, QCTL, method="double").method == METHOD_DIRECT
    assert f1_eval(p, 0.2, 0.4, CTL, QCTL, method="integral").method == METHOD_QUADRATURE
    with pytest.raises(DomainError):
        f1_eval(p, 0.2, 0.4, CTL, QCTL, method="nosuch")


def test_auto_dispatch_near_corner_uses_transform():
    p = AppellParams(0.5, 0.5, 0.5, 1.5)
    res = f1_eval(p, 0.97, 0.99, CTL, QCTL)
    assert res.method in (METHOD_TRANSFORMED, METHOD_QUADRATURE)
    # cross-check against the integral representation
    ref = f1_integral(p, 0.97, 0.99, QCTL)
    assert res.value == pytest.approx(ref.value, rel=1e-10)


def test_integral_route_requires_zero_balanced_positive():
    with pytest.raises(DomainError):
        f1_integral(AppellParams(0.5, 0.5, 0.5, 2.0), 0.3, 0.4, QCTL)


ELLIPTIC_CASES = [
    (0.5, 0.0, math.pi / 6.0),
    (0.5, 1.0, math.atanh(0.5)),
    (0.9, 0.9, 1.3531754269101170),
    (0.7, 0.5, 0.7936825646393590),
]


@pytest.mark.parametrize("lam,k,want", ELLIPTIC_CASES)
def test_elliptic_reference(lam, k, want):
    res = elliptic_f(lam, k, CTL, QCTL)
    assert res.value == pytest.approx(want, rel=1e-11)


def test_elliptic_zero_amplitude():
    assert elliptic_f(0.0, 0.3, CTL, QCTL).value == 0.0


def test_random_route_cross_agreement():
    rng = np.random.default_rng(7)
    for _ in range(25):
        al, b1, b2 = rng.uniform(0.2, 1.8, 3)
        p = AppellParams(al, b1, b2, al + b1 + b2)
        x, y = rng.uniform(0.05, 0.85, 2)
        d = f1_double_series(p, x, y, CTL).value
        q = f1_integral(p, x, y, QCTL).value
        assert q == pytest.approx(d, rel=1e-10)
