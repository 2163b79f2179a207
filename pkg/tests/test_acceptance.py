"""Acceptance suite: one test per criterion, printing a PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
report.  All solver products from criteria 1-5 are collected once in a
module-scoped fixture so criterion 8 can audit the certificates of every
solve the earlier criteria relied on.
"""

import time

import numpy as np
import pytest

from bidisk.analysis import decay_scan, fit_log_mode, fit_power
from bidisk.approximants import (
    BasisSpec,
    closed_form_twisted,
    diagonal_reduce_solve,
    perturbation_check,
    residual_norm_sq,
    riesz_approximant,
    riesz_diagonal,
    solve_optimal,
)
from bidisk.capacity import (
    annihilation_check,
    bergman_norm_sq,
    cauchy_transform,
    diagonal_current,
    energy,
)
from bidisk.series import DiagonalPattern, OneVarSeries, TwoVarSeries, separable
from bidisk.spaces import norm2
from bidisk.suites import run_suite

from oracles import brute_gram_dist_sq, onevar_one_minus_z_dist_sq

F_DIAG = TwoVarSeries.from_terms({(0, 0): 1, (1, 1): -1})
F_PROD = separable(OneVarSeries([1, -1]), OneVarSeries([1, -1]))
PAT11 = DiagonalPattern(1, 1)

# Plateau level for criterion 5, recorded from the one-variable oracle at
# doubled parameter 2: the squared distances decrease to 1/sum_k (k+1)^-2,
# i.e. to 6/pi^2.
PLATEAU_LEVEL = 6.0 / np.pi**2

CRIT3_ALPHAS = (-1.0, -0.5, 0.0, 0.25)
CRIT3_NS = [20, 27, 36, 49, 66, 89, 120, 161, 200]
CRIT4_ALPHAS = (-0.5, 0.0, 0.5)
CRIT4_NS = [4, 6, 8, 12, 16, 23, 32]
CRIT5_NS = [20, 40, 60, 80, 100, 120, 140, 160, 180, 200]


def report(num, ok, detail):
    print(f"[criterion {num}] {'PASS' if ok else 'FAIL'} — {detail}")


@pytest.fixture(scope="module")
def solves():
    """Every solver run used by criteria 1-5, with per-segment wall times."""
    reg = {"times": {}}

    t0 = time.perf_counter()
    reg["c1_full"] = [solve_optimal(F_DIAG, 0.0, BasisSpec.full(n)) for n in range(11)]
    reg["c1_diag"] = [diagonal_reduce_solve(F_DIAG, 0.0, n, PAT11) for n in range(11)]
    reg["c1_oracle"] = [
        brute_gram_dist_sq(F_DIAG, 0.0, BasisSpec.full(n).indices2())[0] for n in range(11)
    ]
    reg["times"][1] = time.perf_counter() - t0

    t0 = time.perf_counter()
    reg["c3"] = {
        alpha: decay_scan(F_DIAG, alpha, CRIT3_NS, basis="diagonal") for alpha in CRIT3_ALPHAS
    }
    reg["c3_log"] = decay_scan(F_DIAG, 0.5, CRIT3_NS, basis="diagonal")
    reg["times"][3] = time.perf_counter() - t0

    t0 = time.perf_counter()
    reg["c4"] = {
        alpha: decay_scan(F_PROD, alpha, CRIT4_NS, basis="full") for alpha in CRIT4_ALPHAS
    }
    reg["times"][4] = time.perf_counter() - t0

    t0 = time.perf_counter()
    reg["c5"] = decay_scan(F_DIAG, 1.0, CRIT5_NS, basis="diagonal")
    reg["times"][5] = time.perf_counter() - t0

    return reg


def _all_results(reg):
    """(result, f, alpha) for every solve recorded by the fixture."""
    out = []
    for res in reg["c1_full"] + reg["c1_diag"]:
        out.append((res, F_DIAG, 0.0))
    for alpha, ds in reg["c3"].items():
        out.extend((r, F_DIAG, alpha) for r in ds.results)
    out.extend((r, F_DIAG, 0.5) for r in reg["c3_log"].results)
    for alpha, ds in reg["c4"].items():
        out.extend((r, F_PROD, alpha) for r in ds.results)
    out.extend((r, F_DIAG, 1.0) for r in reg["c5"].results)
    return out


def test_criterion1_exact_small_case_optima(solves):
    ok = True
    worst = 0.0
    for n in range(11):
        exact = 1.0 / (n + 2)
        full = solves["c1_full"][n].residual_sq
        diag = solves["c1_diag"][n].residual_sq
        oracle = solves["c1_oracle"][n]
        worst = max(
            worst, abs(full - exact), abs(diag - exact), abs(full - diag), abs(full - oracle)
        )
        ok &= abs(full - diag) <= 1e-9
        ok &= abs(full - oracle) <= 1e-10 and abs(diag - oracle) <= 1e-10
        ok &= abs(full - exact) <= 1e-10 and abs(diag - exact) <= 1e-10
    runtime = solves["times"][1]
    ok &= runtime < 10.0
    report(1, ok, f"dist^2 = 1/(n+2) for n=0..10, worst deviation {worst:.2e}, {runtime:.1f}s")
    assert ok


def test_criterion2_riesz_closed_form():
    t0 = time.perf_counter()
    ok = True
    worst = 0.0
    for M, N in ((1, 1), (2, 3)):
        pat = DiagonalPattern(M, N)
        f = TwoVarSeries.from_terms({(0, 0): 1, (M, N): -1})
        for alpha in (-1.0, 0.0, 0.5):
            for n in range(0, 51):
                p = riesz_diagonal(f, alpha, n, pat)
                got = residual_norm_sq(p, f, alpha)
                want = closed_form_twisted(alpha, n, pat)
                worst = max(worst, abs(got - want))
                ok &= abs(got - want) <= 1e-12
                if (M, N) == (1, 1):
                    # the square-grid construction coincides on this pattern
                    got_sq = residual_norm_sq(riesz_approximant(f, alpha, n), f, alpha)
                    ok &= abs(got_sq - want) <= 1e-12
            ratios = [
                closed_form_twisted(alpha, n, pat) * (n + 1.0) ** (1.0 - 2.0 * alpha)
                for n in range(10, 201)
            ]
            c1_fitted = max(ratios)
            ok &= np.isfinite(c1_fitted) and c1_fitted > 0
    runtime = time.perf_counter() - t0
    ok &= runtime < 30.0
    report(2, ok, f"closed form matched to {worst:.2e}; decay bound constants finite; "
                  f"{runtime:.1f}s")
    assert ok


def test_criterion3_sharp_diagonal_rate(solves):
    ok = True
    details = []
    for alpha in CRIT3_ALPHAS:
        fit = fit_power(solves["c3"][alpha], n_min=20, n_max=200)
        target = -(1.0 - 2.0 * alpha)
        details.append(f"a={alpha:+.2f}: {fit.exponent:+.3f} vs {target:+.2f}")
        ok &= abs(fit.exponent - target) <= 0.15
    log_fit = fit_log_mode(solves["c3_log"], n_min=20, n_max=200)
    details.append(f"a=+0.50: log stability {log_fit.r_squared:.3f}")
    ok &= log_fit.r_squared >= 0.8
    runtime = solves["times"][3]
    ok &= runtime < 60.0
    report(3, ok, "; ".join(details) + f"; {runtime:.1f}s")
    assert ok


def test_criterion4_separable_rate(solves):
    ok = True
    details = []
    for alpha in CRIT4_ALPHAS:
        fit = fit_power(solves["c4"][alpha], n_min=4, n_max=32)
        target = -(1.0 - alpha)
        details.append(f"a={alpha:+.2f}: {fit.exponent:+.3f} vs {target:+.2f}")
        ok &= abs(fit.exponent - target) <= 0.2
    runtime = solves["times"][4]
    ok &= runtime < 300.0
    report(4, ok, "; ".join(details) + f"; {runtime:.1f}s")
    assert ok


def test_criterion5_noncyclicity_plateau(solves):
    ds = solves["c5"]
    ok = bool(np.all(ds.values >= PLATEAU_LEVEL))
    runtime = solves["times"][5]
    ok &= runtime < 30.0
    level = ds.values[-1]
    report(
        5,
        ok,
        f"dist^2 bounded below by fixture L = {PLATEAU_LEVEL:.6f} "
        f"(level at n=200: {level:.6f}); {runtime:.1f}s "
        "(stability clause reported separately)",
    )
    assert ok


@pytest.mark.xfail(
    strict=True,
    reason="stated tolerance is unattainable: the exact one-variable oracle gives "
    "|dist^2(200) - dist^2(100)| = 1.7965e-3 > 1e-3 (see decisions ledger)",
)
def test_criterion5_stability_clause(solves):
    vals = dict(solves["c5"].points)
    delta = abs(vals[200] - vals[100])
    oracle_delta = abs(
        onevar_one_minus_z_dist_sq(2.0, 200) - onevar_one_minus_z_dist_sq(2.0, 100)
    )
    ok = delta <= 1e-3
    report(
        5,
        ok,
        f"stability clause: |dist^2(200) - dist^2(100)| = {delta:.4e} "
        f"(oracle value {oracle_delta:.4e}) vs stated tolerance 1e-3",
    )
    assert ok


def test_criterion6_inequality_suites():
    t0 = time.perf_counter()
    ok = True
    details = []
    for name in ("restriction", "separable", "polyextraction", "comparison", "slice"):
        result = run_suite(name, trials=500, seed=7)
        details.append(f"{name}: {result.violations}")
        ok &= result.passed
    runtime = time.perf_counter() - t0
    ok &= runtime < 60.0
    report(6, ok, "violations — " + ", ".join(details) + f"; {runtime:.1f}s")
    assert ok


def test_criterion7_capacity():
    t0 = time.perf_counter()
    mu = diagonal_current(1000)
    e = energy(mu, 1000).partial
    energy_gap = abs(e - (1 + np.pi**2 / 12))
    g = cauchy_transform(mu, 1000, 1000)
    bergman_gap = abs(bergman_norm_sq(g) - np.pi**2 / 6)
    annihilation = annihilation_check(F_DIAG, diagonal_current(9), 8)
    runtime = time.perf_counter() - t0
    ok = energy_gap <= 1e-3 and bergman_gap <= 1e-3 and annihilation == 0.0 and runtime < 5.0
    report(
        7,
        ok,
        f"energy gap {energy_gap:.2e}, Bergman gap {bergman_gap:.2e}, "
        f"annihilation max {annihilation}; {runtime:.1f}s",
    )
    assert ok


def test_criterion8_solver_certificates(solves):
    results = _all_results(solves)
    assert results, "criteria 1-5 must have produced solves"
    ok = True
    worst_ortho = 0.0
    worst_drop = 0.0
    for i, (res, f, alpha) in enumerate(results):
        bound = 1e-8 * norm2(f, alpha) ** 2
        worst_ortho = max(worst_ortho, res.ortho_residual / bound)
        ok &= res.ortho_residual <= bound
        drop = perturbation_check(res, f, alpha, n_directions=20, eps=1e-3, seed=1000 + i)
        worst_drop = max(worst_drop, drop)
        ok &= drop <= 1e-9
    report(
        8,
        ok,
        f"{len(results)} solves audited; worst orthogonality ratio {worst_ortho:.2e}, "
        f"worst perturbation decrease {worst_drop:.2e}",
    )
    assert ok
