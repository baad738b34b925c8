"""Tests for grids, transforms, and Fourier multipliers."""

import math

import numpy as np
import pytest

from bihnls import spectral as sp
from bihnls.diagnostics import lebesgue_norm, sobolev_norm

TWO_PI = 2.0 * math.pi


class TestMakeGrid:
    def test_unit_box_frequencies_are_integers(self):
        grid = sp.make_grid(1, 8, TWO_PI)
        assert sorted(grid.freq_axis) == [-4, -3, -2, -1, 0, 1, 2, 3]

    def test_5d_within_default_budget(self):
        grid = sp.make_grid(5, 16, TWO_PI)
        assert grid.num_points == 16**5 == 1_048_576

    def test_budget_rejection(self):
        with pytest.raises(sp.PointBudgetError):
            sp.make_grid(6, 64, TWO_PI)

    def test_odd_n_rejected(self):
        with pytest.raises(sp.ResolutionError):
            sp.make_grid(1, 9, TWO_PI)

    def test_small_n_rejected(self):
        with pytest.raises(sp.ResolutionError):
            sp.make_grid(1, 6, TWO_PI)

    def test_bad_dim_rejected(self):
        with pytest.raises(sp.ResolutionError):
            sp.make_grid(8, 8, TWO_PI)

    def test_nonpositive_ell_rejected(self):
        with pytest.raises(sp.BoxError):
            sp.make_grid(1, 8, 0.0)

    def test_env_budget_override(self, monkeypatch):
        monkeypatch.setenv(sp.POINT_BUDGET_ENV, "100")
        with pytest.raises(sp.PointBudgetError):
            sp.make_grid(1, 256, TWO_PI)
        monkeypatch.setenv(sp.POINT_BUDGET_ENV, "1000000000")
        sp.make_grid(5, 16, TWO_PI)


class TestField:
    def test_shape_mismatch(self):
        grid = sp.make_grid(1, 8, TWO_PI)
        with pytest.raises(sp.FieldError):
            sp.Field(grid, np.zeros(7, dtype=complex))

    def test_nonfinite_rejected(self):
        grid = sp.make_grid(1, 8, TWO_PI)
        values = np.zeros(8, dtype=complex)
        values[3] = np.nan
        with pytest.raises(sp.FieldError):
            sp.Field(grid, values)

    def test_values_read_only(self):
        f = sp.Field.zeros(sp.make_grid(1, 8, TWO_PI))
        with pytest.raises(ValueError):
            f.values[0] = 1.0


class TestTransforms:
    @pytest.mark.parametrize("dim,n", [(1, 8), (1, 256), (2, 32), (5, 16)])
    def test_round_trip(self, dim, n):
        grid = sp.make_grid(dim, n, TWO_PI)
        f = sp.random_field(grid, seed=dim * 100 + n)
        back = sp.inverse(grid, sp.forward(f))
        scale = np.max(np.abs(f.values))
        assert np.max(np.abs(back.values - f.values)) <= 1e-12 * scale

    @pytest.mark.parametrize("dim,n,ell", [(1, 64, TWO_PI), (2, 16, 5.0), (3, 8, 1.0)])
    def test_parseval(self, dim, n, ell):
        grid = sp.make_grid(dim, n, ell)
        f = sp.random_field(grid, seed=9)
        phys = grid.cell_volume * np.sum(np.abs(f.values) ** 2)
        spec = grid.cell_volume * np.sum(np.abs(sp.forward(f)) ** 2)
        assert phys == pytest.approx(spec, rel=1e-12)

    def test_plane_wave_is_single_coefficient(self):
        grid = sp.make_grid(2, 16, TWO_PI)
        f = sp.plane_wave(grid, (3, -5), 2.0)
        coeffs = sp.forward(f)
        k = np.argmax(np.abs(coeffs))
        idx = np.unravel_index(k, coeffs.shape)
        assert idx == (3, 16 - 5)
        off_peak = np.abs(coeffs).flatten()
        off_peak[k] = 0.0
        assert np.max(off_peak) < 1e-10 * np.abs(coeffs[idx])


class TestMultipliers:
    def test_smoothing_plateau_identity(self):
        grid = sp.make_grid(1, 64, TWO_PI)
        f = sp.plane_wave(grid, (3,))
        out = sp.apply_multiplier(f, sp.MultiplierSpec.i_smoothing(4.0, 1.5))
        assert np.max(np.abs(out.values - f.values)) < 1e-12

    def test_smoothing_tail_scaling(self):
        grid = sp.make_grid(1, 64, TWO_PI)
        f = sp.plane_wave(grid, (16,))
        out = sp.apply_multiplier(f, sp.MultiplierSpec.i_smoothing(4.0, 1.5))
        factor = 4.0 ** (1.5 - 2.0)
        assert np.max(np.abs(out.values - factor * f.values)) < 1e-12

    def test_phase_identity_at_zero_time(self):
        grid = sp.make_grid(1, 64, TWO_PI)
        f = sp.random_field(grid, seed=1)
        out = sp.apply_multiplier(f, sp.MultiplierSpec.biharmonic_phase(0.0))
        assert np.max(np.abs(out.values - f.values)) < 1e-13

    def test_input_not_mutated(self):
        grid = sp.make_grid(1, 64, TWO_PI)
        f = sp.random_field(grid, seed=2)
        before = f.values.copy()
        sp.apply_multiplier(f, sp.MultiplierSpec.fractional(2.0))
        assert np.array_equal(f.values, before)

    def test_negative_fractional_zeroes_mean(self):
        grid = sp.make_grid(1, 64, TWO_PI)
        constant = sp.Field(grid, np.full(grid.shape, 1.0 + 0.0j))
        out = sp.apply_multiplier(constant, sp.MultiplierSpec.fractional(-0.5))
        assert np.max(np.abs(out.values)) < 1e-14

    def test_morawetz_weight_identity_at_d5(self):
        grid = sp.make_grid(2, 16, TWO_PI)
        f = sp.random_field(grid, seed=3)
        out = sp.apply_multiplier(f, sp.MultiplierSpec.morawetz_weight(5))
        assert np.max(np.abs(out.values - f.values)) < 1e-13

    def test_unknown_kind_rejected(self):
        with pytest.raises(sp.MultiplierError):
            sp.MultiplierSpec("nonsense")

    def test_bad_gamma_rejected(self):
        with pytest.raises(sp.MultiplierError):
            sp.MultiplierSpec.i_smoothing(8.0, 2.0)


class TestSmoothingProfile:
    def test_plateau_and_tail_exact(self):
        assert sp.i_symbol_profile(2.0, 4.0, 1.5) == 1.0
        assert sp.i_symbol_profile(8.0, 4.0, 1.5) == 2.0 ** (1.5 - 2.0)
        assert sp.i_symbol_profile(16.0, 4.0, 0.5) == 4.0 ** (0.5 - 2.0)

    def test_blend_strictly_between(self):
        value = sp.i_symbol_profile(6.0, 4.0, 1.5)
        assert 2.0 ** (1.5 - 2.0) < value < 1.0

    @pytest.mark.parametrize("gamma", [0.0, 0.7, 1.5, 1.9])
    def test_non_increasing(self, gamma):
        radii = np.linspace(0.0, 200.0, 5001)
        profile = sp.i_symbol_profile(radii, 8.0, gamma)
        assert np.all(np.diff(profile) <= 1e-15)

    def test_gamma_range_enforced(self):
        with pytest.raises(sp.MultiplierError):
            sp.i_symbol_profile(1.0, 4.0, -0.1)
        with pytest.raises(sp.MultiplierError):
            sp.i_symbol_profile(1.0, 4.0, 2.0)


class TestLittlewoodPaley:
    def test_low_plus_high_is_identity(self):
        grid = sp.make_grid(1, 256, TWO_PI)
        f = sp.random_field(grid, seed=4)
        for M in sp.resolvable_dyadic_scales(grid):
            low = sp.lp_project(f, M, "low")
            high = sp.lp_project(f, M, "high")
            gap = np.abs(low.values + high.values - f.values)
            assert np.max(gap) < 1e-13

    def test_low_passes_low_mode(self):
        grid = sp.make_grid(1, 64, TWO_PI)
        f = sp.plane_wave(grid, (3,))
        out = sp.lp_project(f, 4.0, "low")
        assert np.max(np.abs(out.values - f.values)) < 1e-12

    def test_band_is_low_difference(self):
        grid = sp.make_grid(1, 128, TWO_PI)
        f = sp.random_field(grid, seed=5)
        for M in (2.0, 8.0, 32.0):
            band = sp.lp_project(f, M, "band")
            diff = sp.lp_project(f, M, "low").values - sp.lp_project(f, M / 2.0, "low").values
            assert np.max(np.abs(band.values - diff)) < 1e-13

    def test_band_telescoping(self):
        grid = sp.make_grid(1, 256, TWO_PI)
        f = sp.random_field(grid, seed=6)
        # remove the mean so the telescoping sum reconstructs everything
        coeffs = sp.forward(f)
        coeffs = np.where(grid.rho > 0, coeffs, 0.0)
        f = sp.inverse(grid, coeffs)
        total = np.zeros(grid.shape, dtype=complex)
        for M in sp.resolvable_dyadic_scales(grid):
            total += sp.lp_project(f, M, "band").values
        assert np.max(np.abs(total - f.values)) < 1e-12

    def test_non_dyadic_rejected(self):
        with pytest.raises(sp.MultiplierError):
            sp.MultiplierSpec.lp_low(3.0)

    def test_unresolvable_scale_rejected(self):
        grid = sp.make_grid(1, 8, TWO_PI)
        f = sp.random_field(grid, seed=7)
        with pytest.raises(sp.MultiplierError):
            sp.lp_project(f, 64.0, "low")

    @pytest.mark.parametrize("s", [0.5, 1.0, 2.0])
    def test_bernstein_ratio_window(self, s):
        grid = sp.make_grid(1, 256, TWO_PI)
        rng = np.random.default_rng(8)
        for M in sp.resolvable_dyadic_scales(grid):
            annulus = (grid.rho > M / 2.0) & (grid.rho < 2.0 * M)
            if not annulus.any():
                continue
            coeffs = np.where(
                annulus, rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape), 0.0
            )
            f = sp.inverse(grid, coeffs)
            proj = sp.lp_project(f, M, "band")
            deriv = sp.apply_multiplier(proj, sp.MultiplierSpec.fractional(s))
            ratio = lebesgue_norm(deriv, 2.0) / (M**s * lebesgue_norm(proj, 2.0))
            assert 2.0**-s <= ratio <= 2.0**s


class TestSandwich:
    def test_smoothing_spread_bounded(self):
        grid = sp.make_grid(1, 2048, TWO_PI)
        gamma = 1.5
        f = sp.random_field(grid, seed=3, spectral_slope=(3.0 + gamma) / 2.0)
        h_gamma = sobolev_norm(f, gamma)
        lower, upper = [], []
        for N in (4.0, 8.0, 16.0, 32.0, 64.0, 128.0, 256.0):
            smoothed = sp.apply_multiplier(f, sp.MultiplierSpec.i_smoothing(N, gamma))
            h2 = sobolev_norm(smoothed, 2.0)
            lower.append(h_gamma / h2)
            upper.append(h2 / (N ** (2.0 - gamma) * h_gamma))
        assert max(lower) / min(lower) <= 4.0
        assert max(upper) / min(upper) <= 4.0


class TestSymbolTable:
    def test_samples_match_profile(self):
        spec = sp.MultiplierSpec.i_smoothing(8.0, 1.5)
        radii = np.linspace(0.0, 32.0, 65)
        table = sp.symbol_table(spec, radii)
        assert len(table) == 65
        assert table[0] == (0.0, 1.0)
        rho, value = table[-1]
        assert value == pytest.approx((rho / 8.0) ** (1.5 - 2.0), rel=1e-13)
