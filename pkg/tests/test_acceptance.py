"""Acceptance suite: one test per criterion, one printed line per criterion.

Run with ``pytest -s tests/test_acceptance.py`` to see the PASS/FAIL lines.
"""

import math
import os
import subprocess
import sys
import time

import numpy as np

from gftlab.analysis import (
    DEFAULT_RADII,
    GridSpec,
    bound_G,
    bound_U,
    conjecture_scan,
    estimate_univalence_radius,
    eval_on_points,
    partial_sum,
    radius_s2_closed_form,
    verify_h_monotone,
    verify_strip_lemma,
    verify_theorem_arg_bound,
    verify_theorem_f_over_z,
    verify_theorem_radial_bounds,
    verify_theorem_re_fprime,
    verify_theorem_strip_fprime,
)
from gftlab.gft_ops import (
    LParams,
    RParams,
    apply_L,
    cis,
    extreme_function,
    seeded_members_L,
    seeded_members_R,
    solve_L,
)
from gftlab.powser import TaylorSeries, derivative

ALPHAS_8 = [-math.pi + (j + 1) * 2 * math.pi / 8 for j in range(8)]
ALPHAS_16 = [-math.pi + (j + 1) * 2 * math.pi / 16 for j in range(16)]
BETAS_8 = [i / 8 for i in range(8)]


def _line(num: int, name: str, ok: bool, detail: str = "") -> None:
    state = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {num} {name}: {state}{suffix}")


def test_criterion_1_operator_inversion():
    start = time.perf_counter()
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(200):
        coeffs = rng.normal(size=65) + 1j * rng.normal(size=65)
        coeffs[0] = 1.0
        g = TaylorSeries(tuple(coeffs))
        for alpha in ALPHAS_16:
            back = apply_L(solve_L(g, alpha), alpha)
            dev = max(abs(a - b) for a, b in zip(back.coeffs, g.coeffs))
            worst = max(worst, dev)
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-12 and elapsed < 5.0
    _line(1, "operator-inversion", ok, f"worst coeff dev {worst:.2e}, {elapsed:.1f}s")
    assert worst <= 1e-12
    assert elapsed < 5.0


def test_criterion_2_coefficient_sharpness():
    n = np.arange(2, 65, dtype=float)
    worst = 0.0
    for alpha in ALPHAS_8:
        bounds_denom = n * np.sqrt(2.0 * (n * n + 1 + (n * n - 1) * math.cos(alpha)))
        for beta in BETAS_8:
            params = RParams(alpha, beta)
            bounds = 4.0 * (1.0 - beta) / bounds_denom
            for j in range(16):
                f = extreme_function(cis(2 * math.pi * j / 16), params, 64)
                moduli = np.abs(f.as_array()[2:])
                worst = max(worst, float(np.max(np.abs(moduli - bounds))))
    ok = worst <= 1e-12
    _line(2, "coefficient-sharpness", ok, f"worst |a_n| deviation {worst:.2e}")
    assert ok


def test_criterion_3_strip_lemma():
    ok = True
    worst_margin = math.inf
    for b in (0.51, 0.75, 1.0, 1.5, 10.0):
        report = verify_strip_lemma(LParams(0.0, b), GridSpec(128, 256, 0.999))
        ok = ok and report.passed and report.worst_margin > 0.0
        worst_margin = min(worst_margin, report.worst_margin)
        ok = ok and verify_h_monotone(b, 1024).passed
    _line(3, "strip-lemma", ok, f"smallest interior margin {worst_margin:.2e}")
    assert ok


def test_criterion_4_halfplane_theorems():
    start = time.perf_counter()
    ok = True
    for i, alpha in enumerate(ALPHAS_8):
        for j, beta in enumerate(BETAS_8):
            params = RParams(alpha, beta)
            members = seeded_members_R(params, 100, seed=1000 + 8 * i + j)
            for member in members:
                if not verify_theorem_re_fprime(params, member).passed:
                    ok = False
                if not verify_theorem_f_over_z(params, member).passed:
                    ok = False
    probe_params = RParams(math.pi, 0.0)
    probe = extreme_function(1, probe_params, 16384)
    probe_report = verify_theorem_re_fprime(
        probe_params, probe, GridSpec(1, 1024, 0.999)
    )
    probe_ok = 0.0 < probe_report.worst_margin <= 2e-3
    elapsed = time.perf_counter() - start
    ok = ok and probe_ok and elapsed < 60.0
    _line(
        4,
        "halfplane-theorems",
        ok,
        f"6400 members x 2 theorems, probe margin {probe_report.worst_margin:.2e}, "
        f"{elapsed:.1f}s",
    )
    assert probe_ok
    assert elapsed < 60.0
    assert ok


def test_criterion_5_strip_theorem():
    ok = True
    for b in (0.6, 1.0, 1.5, 5.0):
        for i, alpha in enumerate(ALPHAS_8):
            params = LParams(alpha, b)
            members = seeded_members_L(params, 100, seed=2000 + i)
            for member in members:
                if not verify_theorem_strip_fprime(params, member).passed:
                    ok = False
    _line(5, "strip-theorem", ok, "3200 members on the default grid")
    assert ok


def test_criterion_6_radial_and_arg_bounds():
    # Stated criterion: every seeded member respects G(r), U(r) and the
    # arcsin bound within the tolerance budget on circles r in {0.1..0.9}.
    # The stated U and arcsin closed forms are mathematically wrong for
    # b > 1 (class members attain Re up to 1 + (2b-1)r/(b - (b-1)r)), so
    # those cells fail honestly; see the decisions ledger for the analysis.
    failures: dict[float, int] = {}
    worst_by_b: dict[float, float] = {}
    for b in (0.6, 1.0, 1.5, 5.0):
        failures[b] = 0
        worst_by_b[b] = math.inf
        for i, alpha in enumerate(ALPHAS_8):
            params = LParams(alpha, b)
            members = seeded_members_L(params, 100, seed=3000 + i)
            for member in members:
                radial = verify_theorem_radial_bounds(params, member)
                arg = verify_theorem_arg_bound(params, member)
                if not radial.passed or not arg.passed:
                    failures[b] += 1
                worst_by_b[b] = min(worst_by_b[b], radial.worst_margin)
    exact = all(
        bound_G(r, 1.0) == 1.0 - r and bound_U(r, 1.0) == 1.0 + r
        for r in DEFAULT_RADII
    )
    ok = exact and all(count == 0 for count in failures.values())
    detail = ", ".join(
        f"b={b}: {count} of 800 members violate (worst margin {worst_by_b[b]:+.3f})"
        for b, count in failures.items()
    )
    _line(6, "radial-and-arg-bounds", ok, f"b=1 closed forms exact: {exact}; {detail}")
    assert exact
    assert failures[0.6] == 0
    assert failures[1.0] == 0
    # The next two assertions state the criterion as written. They fail
    # because the stated closed forms are false for b > 1: the bound's
    # denominator b + (b-1)r should be b - (b-1)r there, and the class
    # genuinely attains values outside the stated interval at every radius.
    assert failures[1.5] == 0
    assert failures[5.0] == 0


def test_criterion_7_sharp_section_radius():
    spot_half = radius_s2_closed_form(RParams(math.pi, 0.0))
    spot_one = radius_s2_closed_form(RParams(0.0, 0.0))
    spots_ok = abs(spot_half - 0.5) < 1e-12 and abs(spot_one - 1.0) < 1e-12
    worst_dev = 0.0
    worst_witness = 0.0
    cells = 0
    for alpha in ALPHAS_8:
        for beta in BETAS_8:
            params = RParams(alpha, beta)
            rho = radius_s2_closed_form(params)
            if rho >= 1.0:
                continue
            cells += 1
            s2 = partial_sum(extreme_function(1, params, 64), 2)
            est = estimate_univalence_radius(s2, 4096)
            worst_dev = max(worst_dev, abs(est.radius - rho))
            witness = -(3 + cis(alpha)) / (4 * (1 - beta))
            value = eval_on_points(derivative(s2), np.array([witness]))[0]
            worst_witness = max(worst_witness, abs(value.real))
    ok = spots_ok and worst_dev < 1e-6 and worst_witness < 1e-9 and cells > 0
    _line(
        7,
        "sharp-section-radius",
        ok,
        f"{cells} cells with radius < 1, worst |est-closed| {worst_dev:.2e}, "
        f"worst witness Re {worst_witness:.2e}",
    )
    assert spots_ok
    assert worst_dev < 1e-6
    assert worst_witness < 1e-9
    assert cells > 0


def test_criterion_8_conjecture_scan():
    start = time.perf_counter()
    alphas_4 = [-math.pi + (j + 1) * 2 * math.pi / 4 for j in range(4)]
    betas_4 = [0.0, 0.25, 0.5, 0.75]
    total_rows = 0
    k2_ok = True
    counts_ok = True
    for i, alpha in enumerate(alphas_4):
        for j, beta in enumerate(betas_4):
            rows = conjecture_scan(
                RParams(alpha, beta), k_max=10, num_members=20, seed=4000 + 4 * i + j
            )
            total_rows += len(rows)
            if len(rows) != (10 - 1) * (20 + 16):
                counts_ok = False
            if not all(row.holds for row in rows if row.k == 2):
                k2_ok = False
    elapsed = time.perf_counter() - start
    ok = k2_ok and counts_ok and elapsed < 300.0
    _line(
        8,
        "conjecture-scan",
        ok,
        f"{total_rows} rows over 16 cells, k=2 rows hold: {k2_ok}, {elapsed:.1f}s",
    )
    assert counts_ok
    assert k2_ok
    assert elapsed < 300.0


def _run_cli(args: list[str], threads: str, hashseed: str) -> tuple[int, bytes]:
    env = dict(os.environ)
    env.update(
        {
            "OMP_NUM_THREADS": threads,
            "OPENBLAS_NUM_THREADS": threads,
            "MKL_NUM_THREADS": threads,
            "PYTHONHASHSEED": hashseed,
        }
    )
    proc = subprocess.run(
        [sys.executable, "-m", "gftlab", *args],
        capture_output=True,
        env=env,
        check=False,
    )
    return proc.returncode, proc.stdout


def test_criterion_9_cli_determinism(tmp_path):
    member_path = tmp_path / "member.json"
    code, _ = _run_cli(
        [
            "gen-extreme", "--alpha", "pi", "--beta", "0",
            "--out", str(member_path),
        ],
        "1",
        "0",
    )
    assert code == 0
    commands = [
        ["boundary-curve", "--b", "1.5", "--points", "256"],
        [
            "verify", "re-fprime", "--alpha", "0.7", "--beta", "0.25",
            "--members", "4", "--seed", "11",
        ],
        [
            "conjecture-scan", "--alpha", "pi", "--beta", "0",
            "--kmax", "3", "--members", "2", "--seed", "1", "--order", "16",
        ],
        ["radius-s2", "--alpha", "0", "--beta", "0"],
        ["check-r", "--alpha", "pi", "--beta", "0", "--in", str(member_path)],
    ]
    ok = True
    for args in commands:
        runs = [
            _run_cli(args, threads, hashseed)
            for threads, hashseed in (("1", "0"), ("4", "1"))
        ]
        codes = {code for code, _ in runs}
        outputs = {out for _, out in runs}
        if len(codes) != 1 or len(outputs) != 1:
            ok = False
    _line(9, "cli-determinism", ok, f"{len(commands)} commands, 2 env settings each")
    assert ok
