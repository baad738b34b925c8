"""Acceptance suite: one test per criterion, tolerances pinned in-line.

Every test prints a PASS line with its measured numbers so a bare
``pytest -s tests/test_acceptance.py`` doubles as the acceptance report.
The suite runs the frozen experiment presets and never touches the plots
component.
"""

import math
import time
from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest

from bihnls import diagnostics as dg
from bihnls import dynamics as dy
from bihnls import exponents as ex
from bihnls import experiments as xp
from bihnls import spectral as sp

TWO_PI = 2.0 * math.pi


def test_table1_reproduction():
    t0 = time.perf_counter()
    rows = ex.table1_rows()
    elapsed = time.perf_counter() - t0
    worst = max(row["abs_error"] for row in rows)
    assert worst <= 2e-3
    assert elapsed < 1.0
    expected_rationals = ["1/2", "1", "3/2", "7/6", "5/3"]
    assert [row["gamma_c"] for row in rows] == expected_rationals
    for want, row in zip(expected_rationals, rows):
        assert Fraction(row["gamma_c"]) == Fraction(want)
    print(f"\nACCEPTANCE PASS: table1 (worst |err| {worst:.2e}, {elapsed * 1e3:.0f} ms)")


def test_root_validity_and_condition_flip():
    worst_residual = 0.0
    for nu, d, _, _ in ex.TABLE1:
        root = ex.gamma4(d, nu)
        worst_residual = max(worst_residual, root.residual)
        assert root.residual < 1e-9
        sigma = root.sigma_star
        above = root.value + 2e-3
        below = root.value - 2e-3
        assert ex.gamma_condition_holds(d, nu, above, sigma, ex.delta_max(d, nu, above))
        assert not ex.gamma_condition_holds(d, nu, below, sigma, ex.delta_max(d, nu, below))
    print(f"ACCEPTANCE PASS: root validity (worst residual {worst_residual:.2e}, flip at +/-2e-3)")


def test_exponent_spot_identities():
    for sigma in (0.3, 0.8, 1.4):
        assert ex.theta(5, 3, sigma) == pytest.approx(6.0 / 7.0, abs=1e-13)
    assert ex.epsilon_of(6, 3, 1.0) == 8.0
    for sigma in (0.25, 0.8, 1.5):
        assert ex.epsilon_of(5, 3, sigma) == math.inf
    assert ex.m_sigma_exponents(5, 0.5) == (4.0, 4.0)
    print("ACCEPTANCE PASS: spot identities (theta=6/7, eps(6,3,1)=8, eps(5,3,.)=inf, pair=(4,4))")


def test_admissibility_catalogue():
    for d in (5, 6, 7):
        assert ex.admissibility(math.inf, 2.0, d).biharmonic_admissible
        assert ex.admissibility(2.0, 2.0 * d / (d - 4.0), d).biharmonic_admissible
    rng = np.random.default_rng(123)
    for _ in range(10):
        d = int(rng.integers(5, 12))
        sigma = float(rng.uniform(0.05, 1.9))
        p = (d - 5.0 + 4.0 * sigma) / sigma
        q = 2.0 * d * (d - 5.0 + 4.0 * sigma) / (d * (d - 5.0 + 4.0 * sigma) - 8.0 * sigma)
        assert ex.admissibility(p, q, d).biharmonic_admissible, (d, sigma)
    checked = 0
    for d in (5, 6, 7, 8, 9, 10, 11):
        for nu in (2.5, 3.0, 4.0):
            for k in (3, 4, 8):
                try:
                    qr = ex.qr_exponents(d, nu, k)
                except ex.ExponentError:
                    continue
                assert abs(ex.gamma_pq(*qr.pair_q, d)) <= 1e-12
                assert abs(ex.gamma_pq(*qr.pair_r, d)) <= 1e-12
                checked += 1
    assert checked >= 20
    print(f"ACCEPTANCE PASS: admissibility (endpoints, 10 random pairs, {checked} q*/r* pairs)")


def test_conservation_criterion(tmp_path):
    t0 = time.perf_counter()
    cfg = replace(xp.PRESETS["conservation"], outdir=str(tmp_path))
    assert cfg.t_end / cfg.dt >= 1000  # at least a thousand splitting steps
    summary = xp.run_conservation(cfg)
    elapsed = time.perf_counter() - t0
    mass_drift = summary["metrics"]["mass_drift_rel"]
    ratio = summary["metrics"]["energy_drift_ratio"]
    assert mass_drift < 1e-10
    assert 3.5 <= ratio <= 4.5
    assert elapsed < 10.0
    print(f"ACCEPTANCE PASS: conservation (mass drift {mass_drift:.2e}, "
          f"dt-ratio {ratio:.2f}, {elapsed:.1f} s)")


def test_operator_suite_criterion(tmp_path):
    cfg = replace(xp.PRESETS["operator_suite"], outdir=str(tmp_path))
    report = xp.run_operator_suite(cfg)
    assert report["lp_partition_residual"] < 1e-12
    assert report["bernstein_ok"]
    assert report["i_plateau_error"] < 1e-12
    assert report["i_tail_error"] < 1e-12
    assert report["sandwich_spread_lower"] <= 4.0
    assert report["sandwich_spread_upper"] <= 4.0
    print(f"ACCEPTANCE PASS: operator suite (partition {report['lp_partition_residual']:.1e}, "
          f"sandwich spreads {report['sandwich_spread_lower']:.2f}/"
          f"{report['sandwich_spread_upper']:.2f})")


def test_almost_conservation_sweep_criterion(tmp_path):
    t0 = time.perf_counter()
    line = xp.run_almost_conservation_sweep(
        replace(xp.PRESETS["sweep"], outdir=str(tmp_path / "line"))
    )
    drifts = [e.drift for e in line.entries if e.included]
    assert [e.N for e in line.entries if e.included] == [8.0, 16.0, 32.0, 64.0]
    assert all(b <= a * 1.05 for a, b in zip(drifts, drifts[1:]))
    assert line.slope < 0.0
    assert line.verdict

    heavy = xp.run_almost_conservation_sweep(
        replace(xp.PRESETS["sweep_heavy"], outdir=str(tmp_path / "heavy"))
    )
    by_n = {e.N: e.drift for e in heavy.entries if e.included}
    assert by_n[4.0] <= by_n[2.0]
    elapsed = time.perf_counter() - t0
    assert elapsed < 300.0
    print(f"ACCEPTANCE PASS: almost-conservation sweep (slope {line.slope:.2f}, "
          f"drifts {['%.2e' % d for d in drifts]}, heavy {by_n[4.0]:.2e} <= {by_n[2.0]:.2e}, "
          f"{elapsed:.0f} s)")


def test_scattering_criterion(tmp_path):
    cfg = replace(xp.PRESETS["scattering"], outdir=str(tmp_path / "main"))
    summary = xp.run_scattering(cfg)
    residuals = summary["metrics"]["residuals"]
    assert all(b < a for a, b in zip(residuals, residuals[1:]))
    zero = xp.run_scattering(
        replace(cfg, amplitude=0.0, outdir=str(tmp_path / "zero"))
    )
    assert max(zero["metrics"]["residuals"]) < 1e-12
    print(f"ACCEPTANCE PASS: scattering (residuals {['%.2e' % r for r in residuals]}, "
          f"zero-amplitude {max(zero['metrics']['residuals']):.1e})")


def test_scaling_identities():
    grid = sp.make_grid(1, 256, TWO_PI)
    f = sp.random_field(grid, seed=77, band_limit=60.0, spectral_slope=1.0)
    nu, gamma = 3.0, 1.5
    gc = ex.critical_exponent(grid.dim, nu)
    worst = 0.0
    for lam in (0.5, 1.3, 2.0, 4.0):
        scaled = dy.rescale(f, lam, nu)
        mass_err = abs(
            dg.mass(scaled) / (lam ** (2 * gc) * dg.mass(f)) - 1.0
        )
        norm_err = abs(
            dg.sobolev_norm(scaled, gamma, homogeneous=True)
            / (lam ** (gc - gamma) * dg.sobolev_norm(f, gamma, homogeneous=True))
            - 1.0
        )
        worst = max(worst, mass_err, norm_err)
        assert mass_err < 1e-12
        assert norm_err < 1e-12
    print(f"ACCEPTANCE PASS: scaling identities (worst relative error {worst:.2e})")


def test_determinism_criterion(tmp_path):
    cfg = dict(
        experiment="sweep", d=1, n=128, nu=3.0, gamma=1.5, sigma=0.5,
        dt=1e-3, t_end=0.2, cadence=10, N_list=(8.0, 16.0), seed=11,
    )
    outputs = []
    for name, threads in (("run1", 1), ("run2", 1), ("run4", 4)):
        out = tmp_path / name
        xp.run_almost_conservation_sweep(
            xp.ExperimentConfig(outdir=str(out), threads=threads, **cfg)
        )
        outputs.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    assert set(outputs[0]) == {"run_N8.csv", "run_N16.csv", "sweep.csv", "summary.json"}
    assert outputs[0] == outputs[1], "repeat run must be byte-identical"
    assert outputs[0] == outputs[2], "thread count must not change any output byte"
    print("ACCEPTANCE PASS: determinism (byte-identical CSVs across reruns and threads 1/4)")
