"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Monte Carlo rows for the k=1000 bracketing and qualitative-comparison
criteria are computed once per session and shared.
"""

import math

import pytest

from supportsize.bench import SweepConfig, monte_carlo_mse, run_sweep
from supportsize.bounds import (
    chao_mse_leading_term,
    chao_mse_upper,
    bias_bounds,
    plugin_mse_bounds,
    sigma_of,
    solve_alpha,
)
from supportsize.cli import main as cli_main
from supportsize.distributions import FAMILIES, make_distribution
from supportsize.oracle import (
    certification_campaign,
    moment_coefficients,
    summarize_certificates,
)
from supportsize.poisson_model import exact_bias_expression, exact_plugin_mse

from test_oracle import brute_force_partition_counts

K = 1000
N_GRID = (1000.0, 2000.0, 4000.0, 8000.0)
TRIALS = 2000
MASTER_SEED = 0


def report(number, ok, detail=""):
    flag = "PASS" if ok else "FAIL"
    print(f"[criterion {number}] {flag} {detail}")
    assert ok, f"criterion {number}: {detail}"


@pytest.fixture(scope="module")
def mc_rows():
    rows = {}
    for family in FAMILIES:
        P = make_distribution(family, K)
        for n in N_GRID:
            for est in ("plugin", "modified_chao"):
                rows[family, n, est] = monte_carlo_mse(
                    P, n, est, TRIALS, MASTER_SEED, family=family
                )
        rows[family, 2.0 * K, "chebyshev"] = monte_carlo_mse(
            P, 2.0 * K, "chebyshev", TRIALS, MASTER_SEED, family=family
        )
    return rows


def test_criterion_01_exact_plugin_mse():
    worst_rel = 0.0
    for k in (10, 100, 1000):
        P = make_distribution("uniform", k)
        for n in (k / 2, k, 2 * k, 4 * k):
            formula = (
                k * k * math.exp(-2 * n / k)
                + k * math.exp(-n / k)
                - k * math.exp(-2 * n / k)
            )
            rel = abs(exact_plugin_mse(P, float(n)) - formula) / formula
            worst_rel = max(worst_rel, rel)
    ok = worst_rel < 1e-10

    P = make_distribution("uniform", 100)
    mc_ok = True
    for n in (50.0, 100.0, 200.0, 400.0):
        row = monte_carlo_mse(P, n, "plugin", trials=10**5, master_seed=0)
        mc_ok &= abs(row.mse - exact_plugin_mse(P, n)) <= 4 * row.stderr
    report(1, ok and mc_ok,
           f"exact vs formula worst rel {worst_rel:.2e}; MC within 4 stderr: {mc_ok}")


def test_criterion_02_alpha():
    alpha = solve_alpha()
    residual = abs(alpha**2 - 4.0 * math.exp(-(alpha + 2.0)))
    ok = abs(alpha - 0.5569) <= 5e-5 and residual < 1e-11
    report(2, ok, f"alpha={alpha:.10f} residual={residual:.2e}")


def test_criterion_03_sigma_chao():
    value = sigma_of((0.0, 0.0, 1.0))
    ok = abs(value - 0.2821) <= 1e-4
    report(3, ok, f"sigma_Chao={value:.6f}")


def test_criterion_04_bound_bracketing(mc_rows):
    failures = []
    for family in FAMILIES:
        for n in N_GRID:
            total, _ = chao_mse_upper(n, K)
            row = mc_rows[family, n, "modified_chao"]
            if row.mse > total + 4 * row.stderr:
                failures.append((family, n, "modified_chao"))
            _, upper = plugin_mse_bounds(n, K)
            row = mc_rows[family, n, "plugin"]
            if row.mse > upper + 4 * row.stderr:
                failures.append((family, n, "plugin"))
    report(4, not failures, f"violations: {failures or 'none'}")


def test_criterion_05_bias_bounds():
    failures = []
    for family in FAMILIES:
        P = make_distribution(family, K)
        for n in (K / 2, K, 2 * K, 4 * K, 8 * K):
            lower, upper, _ = bias_bounds(float(n), K)
            bias = exact_bias_expression(P, float(n))
            if not (lower - 1e-9 <= bias <= upper + 1e-9):
                failures.append((family, n, bias))
    report(5, not failures, f"violations: {failures or 'none'}")


def test_criterion_06_ratio_claim():
    n = 4.0 * K
    _, plugin_upper = plugin_mse_bounds(n, K)
    ratio = chao_mse_leading_term(n, K) / plugin_upper
    threshold = (K / n) ** 4 * 10
    full_ratio = chao_mse_upper(n, K)[0] / plugin_upper
    ok = ratio < threshold
    report(6, ok,
           f"leading-term ratio {ratio:.3e} < {threshold:.3e} "
           f"(ratio with additive epsilon term: {full_ratio:.3e})")


def test_criterion_07a_modified_chao_beats_plugin(mc_rows):
    failures = []
    for family in FAMILIES:
        for n in (2.0 * K, 4.0 * K, 8.0 * K):
            mc = mc_rows[family, n, "modified_chao"].mse
            pl = mc_rows[family, n, "plugin"].mse
            if not mc < pl:
                failures.append((family, n, mc, pl))
    report("7a", not failures, f"violations: {failures or 'none'}")


def test_criterion_07b_chebyshev_beats_modified_chao(mc_rows):
    n = 2.0 * K
    failures = []
    for family in ("zipf", "geometric", "two_mixture"):
        cheb = mc_rows[family, n, "chebyshev"].mse
        mc = mc_rows[family, n, "modified_chao"].mse
        if not cheb < mc:
            failures.append((family, round(cheb, 1), round(mc, 1)))
    report("7b", not failures,
           f"chebyshev vs modified_chao at n=2k, (family, cheb, mc): "
           f"{failures or 'none'}")


def test_criterion_08_certification_campaign():
    certs = certification_campaign(seed=0)
    summary = summarize_certificates(certs)
    falsified = {k: v["falsified"] for k, v in summary.items()
                 if v["falsified"]}
    cli_code = cli_main(["verify", "--seed", "0"])
    ok = not falsified and cli_code == 0
    report(8, ok,
           f"{len(certs)} certificates, falsified: {falsified or 'none'}, "
           f"verify exit {cli_code}")


def test_criterion_09_moment_coefficients():
    ok = moment_coefficients(4) == (1, 7, 6, 1)
    mismatches = [
        h for h in range(1, 7)
        if moment_coefficients(h) != brute_force_partition_counts(h)
    ]
    report(9, ok and not mismatches,
           f"h=4 -> {moment_coefficients(4)}; brute-force mismatches: "
           f"{mismatches or 'none'}")


def test_criterion_10_sweep_determinism(tmp_path):
    out1, out2 = tmp_path / "w1.csv", tmp_path / "w2.csv"
    base = dict(families=("uniform", "geometric"), k=100,
                n_grid=(100.0, 400.0), estimators=("plugin", "modified_chao"),
                trials=200, master_seed=11)
    run_sweep(SweepConfig(output_path=str(out1), **base), workers=1)
    run_sweep(SweepConfig(output_path=str(out2), **base), workers=3)
    report(10, out1.read_bytes() == out2.read_bytes(),
           "CSV byte-identical across worker counts")
