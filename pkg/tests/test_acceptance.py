"""Acceptance gate: the eight shipped guarantees, one printed verdict line each.

Each test prints `[acceptance] <n>: PASS|FAIL — <label>` with capture
suspended, so the gate is readable in any pytest run. Tolerances here are
the contract; loosening them is a behavior change, not a test fix.
"""

import contextlib
import json
import math
import os
import subprocess
import sys
import time

import numpy as np
import pytest

from zbappell.appell import (AppellParams, f1_double_series, f1_integral,
                             f1_single_series)
from zbappell.approx import Params, f_zb, g_approx, remainder_bound
from zbappell.controls import QuadratureControl, SeriesControl
from zbappell.verify import run_suite

CTL = SeriesControl()
QCTL = QuadratureControl()


@contextlib.contextmanager
def verdict(capfd, criterion, label):
    status = "FAIL"
    try:
        yield
        status = "PASS"
    finally:
        with capfd.disabled():
            print(f"\n[acceptance] {criterion}: {status} — {label}", flush=True)


def assert_all_passed(results, names=None):
    for res in results:
        if names is not None and res.name not in names:
            continue
        assert res.failures == 0, f"{res.name}: {res.failures} failures, worst {res.worst:.3e}"


@pytest.fixture(scope="module")
def bounds_results():
    return run_suite("bounds", samples=100, seed=42)


def test_criterion_1_worked_corner(capfd):
    with verdict(capfd, 1, "worked corner (0.5,0.5,0.5) at x=y=0.99"):
        start = time.perf_counter()
        p = Params(0.5, 0.5, 0.5)
        f = f_zb(p, 0.99, 0.99, CTL, QCTL).value
        g = g_approx(p, 0.99, 0.99).value
        bound = remainder_bound(p, 0.99, 0.99)
        elapsed = time.perf_counter() - start
        s = math.sqrt(0.99)
        assert f == pytest.approx(2.0 * math.atanh(s) / s, rel=1e-10)
        assert g == pytest.approx(math.log(400.0), rel=1e-10)
        assert 0.0 < f - g < bound
        assert elapsed < 1.0


def test_criterion_2_bound_certification_sweep(capfd, bounds_results):
    with verdict(capfd, 2, "positivity and certified bound on 9x9 grid x 3 parameter sets"):
        start = time.perf_counter()
        assert_all_passed(bounds_results,
                          {"bounds.positivity-grid", "bounds.certified-grid"})
        grid = [r for r in bounds_results if r.name == "bounds.positivity-grid"]
        assert grid[0].samples == 3 * 9 * 9
        assert time.perf_counter() - start < 30.0


def test_criterion_3_cross_method_equivalence(capfd, bounds_results):
    with verdict(capfd, 3, "double/single/integral routes agree; remainder matches "
                    "its integral form"):
        rng = np.random.default_rng(42)
        for _ in range(100):
            a, b1, b2 = rng.uniform(0.1, 2.5, 3)
            lo, hi = np.sort(rng.uniform(0.05, 0.9, 2))
            p = AppellParams(a, b1, b2, a + b1 + b2)
            d = f1_double_series(p, lo, hi, CTL).value
            s = f1_single_series(p, lo, hi, CTL).value
            q = f1_integral(p, lo, hi, QCTL).value
            scale = max(1.0, abs(d))
            assert abs(s - d) / scale <= 1e-9
            assert abs(q - d) / scale <= 1e-9
        assert_all_passed(bounds_results, {"bounds.remainder-identity-grid"})


def test_criterion_4_identity_suite(capfd):
    with verdict(capfd, 4, "symmetry, reduction, and relation identities at fixed seed"):
        start = time.perf_counter()
        assert_all_passed(run_suite("symmetry", samples=100, seed=42))
        assert_all_passed(run_suite("reductions", samples=100, seed=42))
        assert time.perf_counter() - start < 60.0


def test_criterion_5_kernel_inequalities(capfd):
    with verdict(capfd, 5, "kernel inequality suite, 10^4 draws, zero violations"):
        assert_all_passed(run_suite("lemma", samples=10000, seed=42))


def test_criterion_6_elliptic_chain(capfd):
    with verdict(capfd, 6, "elliptic integral matches quadrature; corner closed form "
                    "certified"):
        assert_all_passed(run_suite("elliptic", samples=100, seed=42))


def test_criterion_7_asymptotic_order(capfd):
    # The ratio climbs toward its limiting constant as the corner nears, so
    # "never increases with eps" reads: smaller eps, larger-or-equal ratio.
    with verdict(capfd, 7, "remainder/bound ratio in (0,1), non-increasing in the "
                    "ray parameter"):
        for p in (Params(0.5, 0.5, 0.5), Params(1.0, 0.3, 1.7)):
            for (g1, g2) in ((1.0, 1.0), (1.0, 3.0), (5.0, 1.0)):
                ratios = []
                for eps in (1e-2, 1e-3, 1e-4):
                    x, y = 1.0 - g1 * eps, 1.0 - g2 * eps
                    f = f_zb(p, x, y, CTL, QCTL).value
                    g = g_approx(p, x, y).value
                    ratio = (f - g) / remainder_bound(p, x, y)
                    assert 0.0 < ratio < 1.0
                    ratios.append(ratio)
                assert ratios[0] <= 1.1 * ratios[1]
                assert ratios[1] <= 1.1 * ratios[2]


def _run_cli(*args):
    env = os.environ.copy()
    env.pop("ZB_TOL", None)
    return subprocess.run([sys.executable, "-m", "zbappell.cli", *args],
                          capture_output=True, text=True, env=env)


def test_criterion_8_cli_contract(capfd):
    with verdict(capfd, 8, "example invocations: stated exit codes, byte-deterministic"):
        invocations = [
            ("approx", "--a", "0.5", "--b1", "0.5", "--b2", "0.5",
             "--x", "0.99", "--y", "0.99", "--format", "json"),
            ("grid", "--a", "0.5", "--b1", "0.5", "--b2", "0.5",
             "--xmin", "0.8", "--xmax", "0.98", "--ymin", "0.8",
             "--ymax", "0.98", "--steps", "3"),
            ("verify", "--suite", "lemma", "--samples", "10000", "--seed", "42"),
            ("elliptic", "--lambda", "0.5", "--k", "0"),
        ]
        outputs = []
        for args in invocations:
            first = _run_cli(*args)
            second = _run_cli(*args)
            assert first.returncode == 0, f"{args}: exit {first.returncode}"
            assert first.stdout == second.stdout
            outputs.append(first.stdout)

        rec = json.loads(outputs[0])
        assert rec["within_bound"] is True and rec["positive"] is True
        grid_rows = outputs[1].strip().splitlines()
        assert len(grid_rows) == 1 + 9
        assert all(row.endswith("true") for row in grid_rows[1:])
        assert "7/7 properties passed" in outputs[2]
        f_val = float(outputs[3].strip().splitlines()[1].split(",")[2])
        assert f_val == pytest.approx(0.52359877560, rel=1e-10)
