"""Named property suites verifying the identities behind the approximation.

Each suite returns a list of PropertyResult records; the CLI prints them and
tests assert on them.  All randomness comes from a caller-supplied seed, so
identical invocations are byte-identical.
"""

import math
from dataclasses import dataclass

import numpy as np

from .appell import AppellParams, elliptic_f, f1_double_series, f1_eval
from .controls import QuadratureControl, SeriesControl
from .approx import (Params, _approx_bundle, f_zb, g_approx, kernel_f_trunc,
                     kernel_h_trunc, remainder_bound)
from .errors import DomainError
from .hyp import (HypParams2F1, HypParams3F2, f2f1, f2f1_tail,
                  f3f2_lemma_transform, f3f2_to_2f1, f3f2_unit, pfq_series)
from .quadrature import integrate_adaptive
from .scalar import digamma, ramanujan_gamma

GRID_PARAMS = (Params(0.5, 0.5, 0.5), Params(1.0, 0.3, 1.7), Params(2.0, 1.0, 0.25))
GRID_AXIS = tuple(np.linspace(0.05, 0.95, 9))


@dataclass(frozen=True)
class PropertyResult:
    name: str
    samples: int
    failures: int
    worst: float  # largest deviation seen, or smallest margin for inequalities

    @property
    def passed(self) -> bool:
        return self.failures == 0


def _result(name, deviations, tol):
    devs = np.asarray(deviations, dtype=float)
    failures = int(np.count_nonzero(~(devs <= tol)))
    worst = float(np.max(devs)) if devs.size else 0.0
    return PropertyResult(name, int(devs.size), failures, worst)


def _margin_result(name, margins):
    """Inequality checks: every margin must be strictly positive."""
    m = np.asarray(margins, dtype=float)
    failures = int(np.count_nonzero(~(m > 0.0)))
    worst = float(np.min(m)) if m.size else math.inf
    return PropertyResult(name, int(m.size), failures, worst)


def suite_lemma(samples: int = 10000, seed: int = 42) -> list[PropertyResult]:
    """Kernel inequality suite on random (a, b1, b2, u, v, t) draws.

    kernel_f lies strictly between -a/t^2 and 0 and between -1/t and 0;
    kernel_h lies strictly in (-1, 0) and above -t(u*b1 + v*b2); and the
    quadratic sharpening of the linear bound holds wherever it is provable:
    right side positive and at least one factor 1 - b*t*u nonnegative (the
    product of two one-sided linearizations needs a nonnegative side, and
    the bound genuinely fails when both factors go negative).
    Draw ranges keep every strict inequality resolvable in doubles: the
    exponent b1*log1p(ut) + b2*log1p(vt) stays below ~30.4, so 1 + h is
    at least exp(-30.4) ~ 6e-14, hundreds of ulps away from zero.
    """
    rng = np.random.default_rng(seed)
    a = rng.uniform(0.05, 2.0, samples)
    b1 = rng.uniform(0.05, 2.0, samples)
    b2 = rng.uniform(0.05, 2.0, samples)
    u = 10.0 ** rng.uniform(-3.0, math.log10(2.0), samples)
    v = 10.0 ** rng.uniform(-3.0, math.log10(2.0), samples)
    t = 10.0 ** rng.uniform(-3.0, 3.0, samples)
    fk = np.array([kernel_f_trunc(a[i], t[i]) for i in range(samples)])
    hk = np.array([kernel_h_trunc(b1[i], b2[i], u[i], v[i], t[i]) for i in range(samples)])
    linear = t * (u * b1 + v * b2)
    results = [
        _margin_result("lemma.f-above-quadratic", fk - (-a / (t * t))),
        _margin_result("lemma.f-negative", -fk),
        _margin_result("lemma.f-above-harmonic", fk - (-1.0 / t)),
        _margin_result("lemma.h-above-minus-one", hk - (-1.0)),
        _margin_result("lemma.h-negative", -hk),
        _margin_result("lemma.h-above-linear", hk - (-linear)),
    ]
    rhs = linear - t * t * u * v * b1 * b2
    mask = (rhs > 0.0) & ((b1 * t * u <= 1.0) | (b2 * t * v <= 1.0))
    results.append(_margin_result("lemma.h-stronger-quadratic", rhs[mask] - (-hk[mask])))
    return results


def suite_symmetry(samples: int = 100, seed: int = 42) -> list[PropertyResult]:
    """Permutation symmetry of F1 and the two-path symmetry of g.

    The g check pits the straight negative-argument evaluation (3F2 argument
    transformation) against the swapped-parameter series route at the same
    point, which are independent code paths.
    """
    rng = np.random.default_rng(seed)
    devs_f1 = []
    for _ in range(samples):
        al, be1, be2 = rng.uniform(0.1, 2.5, 3)
        ga = al + be1 + be2
        x, y = rng.uniform(0.05, 0.9, 2)
        p = AppellParams(al, be1, be2, ga)
        lhs = f1_double_series(p, x, y).value
        rhs = f1_double_series(p.swapped(), y, x).value
        devs_f1.append(abs(lhs - rhs) / max(1.0, abs(lhs)))
    devs_grid = []
    for p in GRID_PARAMS:
        for x in GRID_AXIS:
            for y in GRID_AXIS:
                if x == y:
                    continue
                via_sym = g_approx(p, x, y, use_symmetry=True)
                hi, lo = (x, y) if y < x else (y, x)
                q = p if y < x else p.swapped()
                direct = g_approx(q, hi, lo, use_symmetry=False)
                devs_grid.append(abs(via_sym.value - direct.value))
    devs_rand = []
    for _ in range(samples):
        a, c1, c2 = rng.uniform(0.1, 2.5, 3)
        pts = rng.uniform(0.05, 0.95, 2)
        x, y = max(pts), min(pts)
        if x == y:
            continue
        p = Params(a, c1, c2)
        devs_rand.append(abs(g_approx(p, x, y, use_symmetry=True).value
                             - g_approx(p, x, y, use_symmetry=False).value))
    return [
        _result("symmetry.f1-permutation", devs_f1, 5e-12),
        _result("symmetry.g-two-path-grid", devs_grid, 1e-11),
        _result("symmetry.g-two-path-random", devs_rand, 1e-11),
    ]


def suite_reductions(samples: int = 100, seed: int = 42) -> list[PropertyResult]:
    """Diagonal and boundary reductions plus the 3F2/2F1 relation suite."""
    rng = np.random.default_rng(seed)
    devs_diag_f1 = []
    devs_diag_g = []
    devs_bnd_g = []
    for _ in range(samples):
        a, c1, c2 = rng.uniform(0.1, 2.5, 3)
        x = rng.uniform(0.05, 0.95)
        p = Params(a, c1, c2)
        appell = p.to_appell()
        lhs = f1_double_series(appell, x, x).value
        rhs = f2f1(HypParams2F1(a, c1 + c2, p.gamma), x).value
        devs_diag_f1.append(abs(lhs - rhs) / max(1.0, abs(rhs)))
        g_val = g_approx(p, x, x).value
        closed = -math.log1p(-x) + ramanujan_gamma(a, c1 + c2)
        devs_diag_g.append(abs(g_val - closed))
        g_b = g_approx(p, x, 1.0).value
        c = c1 + c2
        unit_tail = (c2 / c) * f3f2_unit(c2 + 1.0, c + 1.0).value
        closed_b = -math.log1p(-x) + ramanujan_gamma(a, c) + unit_tail
        devs_bnd_g.append(abs(g_b - closed_b))
    devs_collapse = []
    devs_transform1 = []
    devs_transformb = []
    for _ in range(samples):
        b = rng.uniform(0.2, 2.5)
        if abs(b - 1.0) < 0.05:
            b += 0.1
        c = rng.uniform(0.2, 2.5)
        if abs(c - 1.0) < 0.05:
            c += 0.1
        e = rng.uniform(0.5, 3.0)
        z = rng.uniform(-0.8, 0.8)
        if abs(z) < 1e-3:
            z = 0.1
        lhs = f3f2_to_2f1(b, c, e, z).value
        rhs = pfq_series((1.0, b, c), (2.0, e), z).value
        devs_collapse.append(abs(lhs - rhs) / max(1.0, abs(rhs)))
        zz = rng.uniform(0.05, 0.45)
        lhs = f3f2_lemma_transform(1.0, c, e, zz).value
        rhs = pfq_series((1.0, 1.0, c), (2.0, e), zz / (zz - 1.0)).value
        devs_transform1.append(abs(lhs - rhs) / max(1.0, abs(rhs)))
        lhs = f3f2_lemma_transform(b, c, e, zz).value
        rhs = pfq_series((b, 1.0, c), (2.0, e), zz / (zz - 1.0)).value
        devs_transformb.append(abs(lhs - rhs) / max(1.0, abs(rhs)))
    devs_unit = []
    for _ in range(max(10, samples // 10)):
        c = rng.uniform(0.3, 2.5)
        e = max(c, 1.0) + rng.uniform(0.3, 2.0)
        closed = f3f2_unit(c, e)
        series = pfq_series((1.0, 1.0, c), (2.0, e), 1.0)
        tol = 5.0 * max(series.est_error, 1e-9 * abs(closed.value))
        devs_unit.append(abs(closed.value - series.value) / tol)
    devs_euler = []
    devs_contig = []
    for _ in range(samples):
        a, b = rng.uniform(0.2, 2.0, 2)
        c = rng.uniform(0.5, 3.0)
        z = rng.uniform(-0.8, 0.45)
        lhs = f2f1(HypParams2F1(a, b, c), z).value
        rhs = (1.0 - z) ** (c - a - b) * f2f1(HypParams2F1(c - a, c - b, c), z).value
        devs_euler.append(abs(lhs - rhs) / max(1.0, abs(lhs)))
        resid = (f2f1(HypParams2F1(a, b, c), z).value
                 - f2f1(HypParams2F1(a + 1.0, b, c), z).value
                 + b * z / c * f2f1(HypParams2F1(a + 1.0, b + 1.0, c + 1.0), z).value)
        devs_contig.append(abs(resid))
    return [
        _result("reductions.f1-diagonal", devs_diag_f1, 1e-11),
        _result("reductions.g-diagonal", devs_diag_g, 1e-13),
        _result("reductions.g-boundary", devs_bnd_g, 1e-10),
        _result("reductions.3f2-collapse", devs_collapse, 1e-10),
        _result("reductions.3f2-transform-log", devs_transform1, 1e-10),
        _result("reductions.3f2-transform-power", devs_transformb, 1e-10),
        _result("reductions.3f2-unit-value", devs_unit, 1.0),
        _result("reductions.2f1-euler", devs_euler, 1e-10),
        _result("reductions.2f1-contiguous", devs_contig, 1e-10),
    ]


def suite_bounds(samples: int = 100, seed: int = 42) -> list[PropertyResult]:
    """Positivity and the certified bound on the fixed grid and random draws,
    plus the agreement of f - g with the independent remainder integral."""
    margins_pos = []
    margins_bound = []
    devs_identity = []
    for p in GRID_PARAMS:
        for x in GRID_AXIS:
            for y in GRID_AXIS:
                report, parts = _approx_bundle(p, x, y, SeriesControl(),
                                               QuadratureControl())
                noise = 10.0 * (parts["f"].est_error + parts["g"].est_error)
                margins_pos.append(report.remainder - noise)
                if report.rhombic_r <= 2.0:
                    margins_bound.append(report.bound - report.remainder - noise)
                devs_identity.append(abs(report.remainder - report.remainder_integral))
    rng = np.random.default_rng(seed)
    margins_rand = []
    for _ in range(samples):
        a, c1, c2 = rng.uniform(0.1, 2.5, 3)
        x, y = rng.uniform(0.02, 0.98, 2)
        p = Params(a, c1, c2)
        f_res = f_zb(p, x, y)
        g_res = g_approx(p, x, y)
        rem = f_res.value - g_res.value
        noise = 10.0 * (f_res.est_error + g_res.est_error)
        margins_rand.append(rem - noise)
        r = (1.0 - x) * c1 + (1.0 - y) * c2
        if r <= 2.0:
            margins_rand.append(remainder_bound(p, x, y) - rem - noise)
    return [
        _margin_result("bounds.positivity-grid", margins_pos),
        _margin_result("bounds.certified-grid", margins_bound),
        _result("bounds.remainder-identity-grid", devs_identity, 1e-8),
        _margin_result("bounds.random-draws", margins_rand),
    ]


def suite_elliptic(samples: int = 100, seed: int = 42) -> list[PropertyResult]:
    """The elliptic chain: series evaluation against direct quadrature of the
    defining integral, closed forms at k = 0 and k = 1, and the certified
    error of the Carlson-Gustafson logarithm near the singular corner."""
    qctl = QuadratureControl(rel_tol=1e-13)
    devs_quad = []
    for lam in np.linspace(0.05, 0.95, 10):
        for k in np.linspace(0.0, 1.0, 10):
            got = elliptic_f(float(lam), float(k)).value
            k2 = float(k) * float(k)

            def integrand(t, k2=k2):
                t = np.asarray(t, dtype=float)
                return 1.0 / np.sqrt((1.0 - t * t) * (1.0 - k2 * t * t))

            want = integrate_adaptive(integrand, 0.0, float(lam), qctl).value
            devs_quad.append(abs(got - want) / max(1.0, abs(want)))
    rng = np.random.default_rng(seed)
    devs_closed = []
    for _ in range(samples):
        lam = rng.uniform(0.05, 0.99)
        devs_closed.append(abs(elliptic_f(lam, 1.0).value - math.atanh(lam)))
        devs_closed.append(abs(elliptic_f(lam, 0.0).value - math.asin(lam)))
    margins_cg = []
    half = Params(0.5, 0.5, 0.5)
    for lam in (0.9, 0.99):
        for k in (0.9, 0.99):
            big_f = elliptic_f(lam, k).value
            cg = math.log(4.0 / (math.sqrt(1.0 - lam * lam)
                                 + math.sqrt(1.0 - k * k * lam * lam)))
            diff = big_f - lam * cg
            ub = 0.5 * lam * remainder_bound(half, lam * lam, k * k * lam * lam)
            margins_cg.append(diff)
            margins_cg.append(ub - diff)
    return [
        _result("elliptic.quadrature-match", devs_quad, 1e-10),
        _result("elliptic.closed-forms", devs_closed, 1e-11),
        _margin_result("elliptic.cg-certified-error", margins_cg),
    ]


SUITES = {
    "bounds": suite_bounds,
    "lemma": suite_lemma,
    "symmetry": suite_symmetry,
    "reductions": suite_reductions,
    "elliptic": suite_elliptic,
}


def run_suite(name: str, samples: int = 100, seed: int = 42) -> list[PropertyResult]:
    if name == "all":
        out = []
        for key in ("bounds", "lemma", "symmetry", "reductions", "elliptic"):
            out.extend(SUITES[key](samples, seed))
        return out
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from "
                          f"{sorted(SUITES)} or 'all'")
    return SUITES[name](samples, seed)
