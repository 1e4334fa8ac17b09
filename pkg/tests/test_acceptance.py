"""Acceptance gate: one test per headline claim, each printing a PASS/FAIL
line with the observed extremes at the stated tolerance.

The finite-P GDOF sandwich check (criterion 8) is asserted exactly as
stated and is expected to fail: the normalized sum-rate approaches its
high-SNR limit only at rate O(1/log SNR), so at P = 1e9 the residual
offset (about 1 bit normalized by C(P) ~ 14.95 bits) exceeds the 0.05
target and the asymptote need not lie between the finite-P achievable and
bound ratios.  The numbers are reported, not hidden.
"""

import math
import time

from icup import (
    ChannelParams,
    b_gain,
    cap,
    gap_report,
    gaps,
    gdof_curve,
    gdof_formula,
    gdof_numeric,
    ub_genie,
    ub_weak_enlarged,
    universal_sum_rate,
)
from icup.cli import main


def _line(num, name, ok, detail):
    print(f"criterion {num} ({name}): {'PASS' if ok else 'FAIL'} — {detail}")
    return ok


def test_criterion_1_weak_two_bit_gap():
    start = time.perf_counter()
    grid = gaps.weak_grid()
    worst = max(
        min(ub_weak_enlarged(p), ub_genie(p)) - universal_sum_rate(p) for p in grid
    )
    elapsed = time.perf_counter() - start
    ok = worst <= 2.0 + 1e-6 and len(grid) >= 10_000 and elapsed < 10.0
    assert _line(
        1, "weak two-bit gap",
        ok, f"max gap {worst:.6f} <= 2 over {len(grid)} points in {elapsed:.2f}s",
    )


def test_criterion_2_gap_decomposition_steps():
    checks = gaps.suite_checks("appendix", gaps.weak_grid())
    worst = {}
    for c in checks:
        worst[c.label] = max(worst.get(c.label, -math.inf), c.observed)
    ok = (
        max(worst["r1-r3"], worst["r1-r4"], worst["r1-r5"]) <= 0.5 + 1e-6
        and worst["delta1"] <= 1.2 + 1e-6
        and worst["delta2"] <= 2.0 + 1e-6
    )
    detail = ", ".join(f"{k} {v:.4f}" for k, v in sorted(worst.items()))
    assert _line(2, "decomposition steps", ok, detail)


def test_criterion_3_full_cooperation_cases():
    checks = gaps.suite_checks("theorem2", gaps.weak_grid() + gaps.theorem2_case1_grid())
    case1 = max((c.observed for c in checks if c.label == "case1"), default=0.0)
    case2 = max((c.observed for c in checks if c.label == "case2"), default=0.0)
    ok = case1 <= 1.0 + 1e-6 and case2 <= 1.5 + 1e-6
    assert _line(
        3, "full-cooperation cases",
        ok, f"case1 max {case1:.4f} <= 1, case2 max {case2:.4f} <= 1.5",
    )


def test_criterion_4_strong_regime_gaps():
    checks = gaps.suite_checks("strong", gaps.strong_grid())
    overall = max(c.observed for c in checks if c.label == "strong")
    case2 = max(c.observed for c in checks if c.label == "case2-cgrc")
    ok = overall <= 1.0 + 1e-6 and case2 <= 0.5 + 1e-6
    assert _line(
        4, "strong one-bit gap",
        ok, f"max gap {overall:.4f} <= 1, case-2 max {case2:.4f} <= 0.5",
    )


def test_criterion_5_noise_limited_gap():
    checks = gaps.suite_checks("noise-limited", gaps.noise_limited_grid())
    worst = max(c.observed for c in checks)
    ok = worst <= 1.0 + 1e-6
    assert _line(
        5, "noise-limited one-bit gap",
        ok, f"max gap {worst:.4f} <= 1 over {len(checks)} points",
    )


def test_criterion_6_exact_capacity():
    worst = 0.0
    n = 0
    for a in (1.001, 1.5, 4.0, 100.0, 1e4):
        for inr in (1.01, 2.0, 50.0, 1e3, 1e6):
            p = inr / a
            params = ChannelParams(p, a, 1.01 * cap(b_gain(a) * p))
            worst = max(worst, abs(gap_report(params).gap))
            n += 1
    ok = worst <= 1e-12
    assert _line(6, "exact capacity", ok, f"max |gap| {worst:.3g} <= 1e-12 on {n} points")


def test_criterion_7_oracle_identity():
    pairs = gaps.oracle_grid()
    gammas = {g for _, g in pairs}
    checks = gaps.suite_checks("oracle", pairs)
    worst = max(c.observed for c in checks)
    ok = worst <= 1e-9 and len(checks) >= 5000 and {0.0, 1.0, None} <= gammas
    assert _line(
        7, "region-oracle identity",
        ok, f"max discrepancy {worst:.3g} <= 1e-9 over {len(checks)} points",
    )


def test_criterion_8_gdof_sandwich():
    alphas, betas, p = gaps.gdof_grid()
    width = lo = hi = -math.inf
    for beta in betas:
        for alpha in alphas:
            d = gdof_formula(float(alpha), beta)
            ach, ub = gdof_numeric(float(alpha), beta, p)
            width = max(width, ub - ach)
            lo = max(lo, ach - d)
            hi = max(hi, d - ub)
    sandwich_ok = width <= 0.05 and lo <= 1e-9 and hi <= 1e-9

    eps = 1e-6
    continuity = max(
        abs(gdof_formula(bp - eps, beta) - gdof_formula(bp + eps, beta))
        for bp in (0.5, 2.0 / 3.0, 1.0, 2.0)
        for beta in betas
    )
    monotone = all(
        gdof_formula(float(alpha), b1) <= gdof_formula(float(alpha), b2)
        for alpha in alphas
        for b1, b2 in zip(sorted(betas), sorted(betas)[1:])
    )
    curves = [tuple(gdof_curve(beta, 0.0, 3.0, 0.05)) for beta in (0.0, 0.25, 0.5, 1.0)]
    deterministic = curves == [
        tuple(gdof_curve(beta, 0.0, 3.0, 0.05)) for beta in (0.0, 0.25, 0.5, 1.0)
    ]
    ok = sandwich_ok and continuity <= 1e-5 and monotone and deterministic
    assert _line(
        8, "GDOF sandwich at P=1e9",
        ok,
        f"max width {width:.4f} (target 0.05), max ach-d {lo:.4f}, "
        f"max d-ub {hi:.4f} (targets 0), continuity {continuity:.2g} <= 1e-5, "
        f"beta-monotone {monotone}, deterministic tables {deterministic}",
    )


def test_criterion_9_master_soundness():
    worst = math.inf
    n = 0
    for grid in (
        gaps.default_grid(),
        gaps.weak_grid(),
        gaps.strong_grid(),
        gaps.noise_limited_grid(),
        gaps.theorem2_case1_grid(),
    ):
        for params in grid:
            worst = min(worst, gap_report(params).gap)
            n += 1
    for params in gaps.weak_grid(12, 12):
        for scheme in ("TreatAsNoise", "UniversalPA", "FullCoopPA", "OptimalGamma"):
            worst = min(worst, gap_report(params, scheme).gap)
            n += 1
    ok = worst >= -1e-9
    assert _line(9, "master soundness", ok, f"min gap {worst:.3g} >= -1e-9 over {n} reports")


def test_criterion_10_byte_determinism(tmp_path):
    sweep_args = [
        "sweep", "--p-min", "0.01", "--p-max", "1e5", "--p-count", "6",
        "--a-min", "0.001", "--a-max", "100", "--a-count", "6",
        "--c12-min", "0", "--c12-max", "5", "--c12-count", "3",
    ]
    gdof_args = [
        "gdof", "--beta", "0.5", "--alpha-min", "0", "--alpha-max", "3",
        "--step", "0.25", "--numeric-p", "1e6",
    ]
    outputs = []
    for tag, args in (("s", sweep_args), ("g", gdof_args)):
        pair = []
        for run in (1, 2):
            path = tmp_path / f"{tag}{run}.csv"
            assert main(args + ["--output", str(path)]) == 0
            pair.append(path.read_bytes())
        outputs.append(pair[0] == pair[1])
    ok = all(outputs)
    assert _line(
        10, "byte determinism",
        ok, f"sweep identical {outputs[0]}, gdof identical {outputs[1]}",
    )
