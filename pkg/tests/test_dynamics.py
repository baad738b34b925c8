"""Tests for the splitting integrator, scaling transform, and snapshots."""

import math

import numpy as np
import pytest

from bihnls import dynamics as dy
from bihnls import spectral as sp
from bihnls.diagnostics import energy, mass, sobolev_norm
from bihnls.exponents import critical_exponent

TWO_PI = 2.0 * math.pi


@pytest.fixture
def line_grid():
    return sp.make_grid(1, 256, TWO_PI)


@pytest.fixture
def smooth_field(line_grid):
    return sp.random_field(line_grid, seed=42, band_limit=20.0, spectral_slope=1.0)


class TestFreePropagate:
    def test_identity_at_zero(self, smooth_field):
        out = dy.free_propagate(smooth_field, 0.0)
        assert np.max(np.abs(out.values - smooth_field.values)) < 1e-14

    def test_plane_wave_eigenmode(self, line_grid):
        f = sp.plane_wave(line_grid, (5,))
        t = 0.37
        out = dy.free_propagate(f, t)
        expected = np.exp(1j * t * 5.0**4) * f.values
        assert np.max(np.abs(out.values - expected)) < 1e-11

    def test_isometry(self, smooth_field):
        out = dy.free_propagate(smooth_field, 1.234)
        assert mass(out) == pytest.approx(mass(smooth_field), rel=1e-13)

    def test_commutes_with_radial_multipliers(self, smooth_field):
        for spec in (
            sp.MultiplierSpec.i_smoothing(8.0, 1.5),
            sp.MultiplierSpec.fractional(1.0),
            sp.MultiplierSpec.lp_low(16.0),
        ):
            a = sp.apply_multiplier(dy.free_propagate(smooth_field, 0.21), spec)
            b = dy.free_propagate(sp.apply_multiplier(smooth_field, spec), 0.21)
            scale = np.max(np.abs(a.values))
            assert np.max(np.abs(a.values - b.values)) < 1e-12 * max(scale, 1.0)


class TestNonlinearPhase:
    def test_identity_at_zero_time(self, smooth_field):
        out = dy.nonlinear_phase(smooth_field, 0.0, 3.0)
        assert np.array_equal(out.values, smooth_field.values)

    def test_constant_field_closed_form(self, line_grid):
        c = 0.7 - 0.2j
        f = sp.Field(line_grid, np.full(line_grid.shape, c))
        t, nu = 0.31, 3.0
        out = dy.nonlinear_phase(f, t, nu)
        expected = np.exp(1j * t * abs(c) ** (nu - 1.0)) * c
        assert np.max(np.abs(out.values - expected)) < 1e-15

    def test_modulus_preserved_pointwise(self, smooth_field):
        out = dy.nonlinear_phase(smooth_field, 0.9, 3.5)
        assert np.max(np.abs(np.abs(out.values) - np.abs(smooth_field.values))) < 1e-14


class TestStrangStep:
    def test_zero_dt_is_identity(self, smooth_field):
        out = dy.strang_step(smooth_field, 0.0, 3.0)
        assert out is smooth_field

    def test_zero_field_fixed_point(self, line_grid):
        z = sp.Field.zeros(line_grid)
        out = dy.strang_step(z, 1e-3, 3.0)
        assert np.max(np.abs(out.values)) == 0.0

    def test_mass_preserved(self, smooth_field):
        out = dy.strang_step(smooth_field, 1e-3, 3.0)
        assert mass(out) == pytest.approx(mass(smooth_field), rel=1e-13)

    def test_time_reversal(self, smooth_field):
        forward = dy.strang_step(smooth_field, 1e-3, 3.0)
        back = dy.strang_step(forward, -1e-3, 3.0)
        scale = np.max(np.abs(smooth_field.values))
        assert np.max(np.abs(back.values - smooth_field.values)) < 1e-10 * scale


class TestEvolve:
    def test_zero_horizon_single_sample(self, smooth_field):
        cfg = dy.SolverConfig(nu=3.0, dt=1e-3, t_end=0.0)
        traj = dy.evolve(smooth_field, cfg, {"mass": lambda f, t: mass(f)})
        assert traj.times == [0.0]
        assert len(traj.rows) == 1

    def test_mass_drift_over_thousand_steps(self, smooth_field):
        cfg = dy.SolverConfig(nu=3.0, dt=1e-3, t_end=1.0, sample_every=50)
        traj = dy.evolve(smooth_field, cfg, {"mass": lambda f, t: mass(f)})
        masses = [row["mass"] for row in traj.rows]
        drift = max(abs(m - masses[0]) for m in masses) / masses[0]
        assert drift < 1e-10

    def test_time_reversal_through_evolve(self, smooth_field):
        cfg = dy.SolverConfig(nu=3.0, dt=5e-4, t_end=0.05, sample_every=100, store_fields=True)
        traj = dy.evolve(smooth_field, cfg, {})
        f = traj.fields[-1]
        for _ in range(cfg.num_steps):
            f = dy.strang_step(f, -cfg.dt, 3.0)
        scale = np.max(np.abs(smooth_field.values))
        assert np.max(np.abs(f.values - smooth_field.values)) < 1e-10 * scale

    def test_matches_repeated_strang_steps(self, smooth_field):
        cfg = dy.SolverConfig(nu=3.0, dt=1e-3, t_end=0.01, store_fields=True)
        traj = dy.evolve(smooth_field, cfg, {})
        f = smooth_field
        for _ in range(cfg.num_steps):
            f = dy.strang_step(f, cfg.dt, 3.0)
        assert np.array_equal(traj.fields[-1].values, f.values)

    def test_energy_drift_second_order(self, line_grid):
        rng = np.random.default_rng(42)
        coeffs = rng.standard_normal(line_grid.shape) + 1j * rng.standard_normal(line_grid.shape)
        coeffs *= np.exp(-line_grid.rho2 / (2.0 * 3.0**2))
        coeffs[line_grid.rho > 6.0] = 0.0
        u = sp.inverse(line_grid, coeffs)
        u = sp.Field(line_grid, 10.0 * u.values / sobolev_norm(u, 2.0))

        def drift(dt):
            cfg = dy.SolverConfig(nu=3.0, dt=dt, t_end=0.5, sample_every=10)
            traj = dy.evolve(u, cfg, {"energy": lambda f, t: energy(f, 3.0)})
            series = [row["energy"] for row in traj.rows]
            return max(abs(e - series[0]) for e in series)

        ratio = drift(2e-4) / drift(1e-4)
        assert 3.5 <= ratio <= 4.5

    def test_blowup_guard(self, smooth_field):
        cfg = dy.SolverConfig(nu=3.0, dt=1e-3, t_end=1.0, blowup_ceiling=1e-9)
        with pytest.raises(dy.BlowupError) as err:
            dy.evolve(smooth_field, cfg, {})
        assert err.value.norm > 1e-9
        assert err.value.trajectory.times == []

    def test_linear_only_matches_free_flow(self, smooth_field):
        cfg = dy.SolverConfig(nu=3.0, dt=1e-3, t_end=0.02, linear_only=True, store_fields=True)
        traj = dy.evolve(smooth_field, cfg, {})
        direct = dy.free_propagate(smooth_field, 0.02)
        scale = np.max(np.abs(direct.values))
        assert np.max(np.abs(traj.fields[-1].values - direct.values)) < 1e-11 * scale


class TestTrajectory:
    def test_rows_must_align(self, line_grid):
        with pytest.raises(ValueError):
            dy.Trajectory(line_grid, [0.0, 1.0], [{}])

    def test_times_strictly_increasing(self, line_grid):
        with pytest.raises(ValueError):
            dy.Trajectory(line_grid, [0.0, 0.0], [{}, {}])

    def test_field_lookup(self, smooth_field):
        cfg = dy.SolverConfig(nu=3.0, dt=1e-3, t_end=0.01, sample_every=5, store_fields=True)
        traj = dy.evolve(smooth_field, cfg, {})
        f = traj.field_at(0.005)
        assert np.array_equal(f.values, traj.fields[1].values)
        with pytest.raises(ValueError):
            traj.field_at(0.0033)


class TestRescale:
    def test_identity_at_unit_factor(self, smooth_field):
        out = dy.rescale(smooth_field, 1.0, 3.0)
        assert out.grid.ell == smooth_field.grid.ell
        assert np.max(np.abs(out.values - smooth_field.values)) < 1e-15

    @pytest.mark.parametrize("lam", [0.5, 1.7, 4.0])
    @pytest.mark.parametrize("nu", [3.0, 4.0])
    def test_mass_scaling(self, smooth_field, lam, nu):
        gc = critical_exponent(smooth_field.grid.dim, nu)
        out = dy.rescale(smooth_field, lam, nu)
        assert mass(out) == pytest.approx(lam ** (2 * gc) * mass(smooth_field), rel=1e-12)

    @pytest.mark.parametrize("gamma", [0.5, 1.5])
    def test_homogeneous_norm_scaling(self, smooth_field, gamma):
        nu, lam = 3.0, 2.3
        gc = critical_exponent(smooth_field.grid.dim, nu)
        out = dy.rescale(smooth_field, lam, nu)
        expected = lam ** (gc - gamma) * sobolev_norm(smooth_field, gamma, homogeneous=True)
        assert sobolev_norm(out, gamma, homogeneous=True) == pytest.approx(expected, rel=1e-12)

    def test_5d_mass_scaling(self):
        grid = sp.make_grid(5, 8, TWO_PI)
        f = sp.random_field(grid, seed=1, spectral_slope=3.0)
        nu, lam = 3.0, 1.9
        gc = critical_exponent(5, nu)
        out = dy.rescale(f, lam, nu)
        assert mass(out) == pytest.approx(lam ** (2 * gc) * mass(f), rel=1e-12)


class TestSnapshots:
    def test_round_trip(self, tmp_path, smooth_field):
        path = tmp_path / "state.bin"
        dy.write_snapshot(path, smooth_field, 0.75)
        back, t = dy.read_snapshot(path)
        assert t == 0.75
        assert back.grid == smooth_field.grid
        assert np.array_equal(back.values, smooth_field.values)

    def test_header_layout(self, tmp_path, smooth_field):
        path = tmp_path / "state.bin"
        dy.write_snapshot(path, smooth_field, 0.25)
        raw = path.read_bytes()
        assert raw[:4] == b"BNLS"
        dim = int.from_bytes(raw[4:8], "little")
        n = int.from_bytes(raw[8:12], "little")
        assert (dim, n) == (1, 256)
        assert len(raw) == 4 + 4 + 4 + 8 + 8 + 16 * 256

    def test_bad_magic_rejected(self, tmp_path):
        path = tmp_path / "junk.bin"
        path.write_bytes(b"XXXX" + bytes(100))
        with pytest.raises(ValueError):
            dy.read_snapshot(path)
