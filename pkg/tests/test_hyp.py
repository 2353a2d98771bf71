import math

import pytest

from zbappell.controls import METHOD_CLOSED, SeriesControl
from zbappell.errors import DegenerateParameterError, DomainError
from zbappell.hyp import (HypParams2F1, HypParams3F2, f2f1, f2f1_param_deriv,
                          f2f1_tail, f3f2_lemma_transform, f3f2_special_cg,
                          f3f2_to_2f1, f3f2_unit, pfq_series,
                          ramanujan_2f1_approx, zb_2f1_log_expansion,
                          zb_3f2_constant_L)
from zbappell.scalar import beta, digamma, ln_gamma, ramanujan_gamma, trigamma

# 30-digit frozen references, one per dispatch region of f2f1.
GAUSS_CASES = [
    (0.3, 0.7, 1.9, 0.25, 1.0306788055704876, 1e-13),   # direct series
    (0.4, 0.8, 2.2, -1.5, 0.8559691159856172, 1e-13),   # negative-argument map
    (0.5, 0.5, 1.0, 0.9, 1.6412644143423707, 1e-12),    # zero-balanced log form
    (1.3, 0.9, 1.2, 0.95, 19.258298356206655, 1e-12),   # positive-excess map
]


@pytest.mark.parametrize("a,b,c,z,want,tol", GAUSS_CASES)
def test_f2f1_reference(a, b, c, z, want, tol):
    res = f2f1(HypParams2F1(a, b, c), z)
    assert res.value == pytest.approx(want, rel=tol)


def test_unit_argument_closed_form():
    res = pfq_series((0.3, 0.4), (1.5,), 1.0)
    want = math.exp(ln_gamma(1.5) + ln_gamma(0.8) - ln_gamma(1.2) - ln_gamma(1.1))
    assert res.method == METHOD_CLOSED
    assert res.value == pytest.approx(want, rel=1e-13)


def test_f2f1_rejects_argument_at_or_past_one():
    with pytest.raises(DomainError):
        f2f1(HypParams2F1(0.5, 0.5, 2.0), 1.5)
    with pytest.raises(DomainError):
        f2f1(HypParams2F1(0.5, 0.5, 2.0), 1.0)


def test_pfq_3f2_reference():
    res = pfq_series((1.0, 1.0, 1.5), (2.0, 2.5), 0.6)
    assert res.value == pytest.approx(1.2620246530715215, rel=1e-13)


def test_zb_log_expansion_matches_series():
    # Beta-weighted zero-balanced value through two independent routes
    direct = beta(0.5, 0.5) * pfq_series((0.5, 0.5), (1.0,), 0.4).value
    logform = zb_2f1_log_expansion(0.5, 0.5, 0.4)
    assert logform.value == pytest.approx(direct, rel=1e-13)
    assert zb_2f1_log_expansion(0.5, 0.5, 0.9).value == pytest.approx(
        beta(0.5, 0.5) * 1.6412644143423707, rel=1e-13)


def test_tail_is_plain_log_when_parameters_match():
    # sum w^k/k = -ln(1-w) when the parameter ratio collapses to 1
    for w in (0.1, 0.45, 0.7):
        res = f2f1_tail(0.8, 0.8, w)
        assert res.value == pytest.approx(-math.log1p(-w), rel=1e-13)


def test_tail_unit_argument():
    res = f2f1_tail(0.5, 1.0, 1.0)
    assert res.value == pytest.approx(digamma(1.0) - digamma(0.5), rel=1e-13)


def test_f3f2_unit_closed_forms():
    res = f3f2_unit(1.5, 2.5)
    want = (2.5 - 1.0) / (1.5 - 1.0) * (digamma(1.5) - digamma(1.0))
    assert res.value == pytest.approx(want, rel=1e-13)
    # continuous limit at the removable parameter value
    res = f3f2_unit(1.0, 2.0)
    assert res.value == pytest.approx(trigamma(1.0), rel=1e-13)


def test_f3f2_unit_against_series_tail_correction():
    closed = f3f2_unit(1.2, 2.6)
    series = pfq_series((1.0, 1.0, 1.2), (2.0, 2.6), 1.0)
    assert abs(series.value - closed.value) <= 5.0 * series.est_error


def test_special_cg_values():
    assert f3f2_special_cg(0.0).value == 1.0
    assert f3f2_special_cg(1.0).value == pytest.approx(4.0 * math.log(2.0), rel=1e-14)
    assert f3f2_special_cg(-3.0).value == pytest.approx(
        4.0 / 3.0 * math.log(1.5), rel=1e-13)
    series = pfq_series((1.0, 1.0, 1.5), (2.0, 2.0), 0.64)
    assert f3f2_special_cg(0.64).value == pytest.approx(series.value, rel=1e-12)


def test_lemma_transform_matches_mapped_series():
    res = f3f2_lemma_transform(0.7, 1.4, 2.2, 0.35)
    mapped = pfq_series((0.7, 1.0, 1.4), (2.0, 2.2), 0.35 / (0.35 - 1.0))
    assert res.value == pytest.approx(mapped.value, rel=1e-12)


def test_f3f2_to_2f1_rejects_degenerate():
    with pytest.raises(DegenerateParameterError):
        f3f2_to_2f1(1.0, 1.5, 2.0, 0.3)


def test_param_deriv_matches_central_difference():
    h = 1e-6
    for (a, b, c, z) in [(0.8, 0.6, 1.5, 0.4), (1.2, 0.9, 2.1, -0.3)]:
        got = f2f1_param_deriv(HypParams2F1(a, b, c), z).value
        fd = (f2f1(HypParams2F1(a + h, b, c), z).value
              - f2f1(HypParams2F1(a - h, b, c), z).value) / (2.0 * h)
        assert got == pytest.approx(fd, rel=1e-7)


def test_ramanujan_approx_improves_toward_one():
    a, b = 0.5, 1.3
    gaps = []
    for x in (0.9, 0.99, 0.999):
        exact = beta(a, b) * f2f1(HypParams2F1(a, b, a + b), x).value
        gaps.append(abs(exact - ramanujan_2f1_approx(a, b, x)))
    assert gaps[2] < gaps[1] < gaps[0]
    assert gaps[2] < 5e-3


def test_constant_l_collapsing_case():
    # upper/lower parameter match kills the correction series
    p = HypParams3F2(1.3, 0.9, 0.5, 2.2, 0.5)
    res = zb_3f2_constant_L(p)
    assert res.value == pytest.approx(ramanujan_gamma(1.3, 0.9), rel=1e-13)


def test_constant_l_is_the_log_asymptote():
    p = HypParams3F2(1.0, 1.0, 0.5, 1.5, 1.0)
    L = zb_3f2_constant_L(p).value
    prefactor = math.exp(ln_gamma(p.a1) + ln_gamma(p.a2) + ln_gamma(p.a3)
                         - ln_gamma(p.b1) - ln_gamma(p.b2))
    ctl = SeriesControl(max_terms=400000)
    gaps = []
    for x in (0.9, 0.99, 0.999):
        weighted = prefactor * pfq_series((p.a1, p.a2, p.a3), (p.b1, p.b2), x, ctl).value
        gaps.append(abs(weighted + math.log1p(-x) - L))
    assert gaps[2] < gaps[1] < gaps[0]
    assert gaps[2] < 0.05
