"""Reproducible experiment recipes and their persistence.

Every recipe takes one ExperimentConfig, runs deterministically from its
seed, and writes the same byte-identical artifacts for the same config:
per-run diagnostics CSVs plus a top-level ``summary.json`` with the keys
``experiment``, ``config_hash``, ``verdicts``, ``slopes``, ``errors`` and
a ``metrics`` block with the measured scalars.
"""

from __future__ import annotations

import hashlib
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, replace
from pathlib import Path

import numpy as np

from . import diagnostics as diag
from . import exponents as expo
from . import spectral as spec
from .dynamics import BlowupError, SolverConfig, Trajectory, evolve, free_propagate, rescale


class ConfigError(ValueError):
    """Malformed experiment configuration."""


@dataclass(frozen=True)
class ExperimentConfig:
    """Knobs of one experiment run; every recipe reads a subset.

    ``N_list`` must be strictly increasing dyadic values.  ``delta`` defaults
    to 0.9 of the admissible supremum for (d, nu, gamma).  The initial-datum
    family is a seeded band-limited complex Gaussian: spectral coefficients
    with either a power-law envelope (exponent ``data_slope``, default the
    scale-critical gamma + d/2) or a Gaussian envelope of width
    ``data_width``, normalized in H^gamma and scaled by ``amplitude``.
    """

    experiment: str = "conservation"
    d: int = 1
    n: int = 256
    ell: float = 2.0 * math.pi
    nu: float = 3.0
    gamma: float = 1.5
    sigma: float = 0.5
    dt: float = 5e-4
    t_end: float = 2.0
    cadence: int = 20
    N_list: tuple[float, ...] = (8.0, 16.0, 32.0, 64.0)
    mu: float = 0.1
    delta: float | None = None
    seed: int = 11
    outdir: str = "out"
    amplitude: float = 1.0
    envelope: str = "power"
    data_slope: float | None = None
    data_width: float = 3.0
    band_limit: float | None = None
    carrier: float = 2.0
    bump_width: float = 1.0
    threads: int = 1
    blowup_ceiling: float = 1e6

    def __post_init__(self):
        if self.nu <= 1:
            raise ConfigError(f"nu must exceed 1, got {self.nu}")
        if self.dt <= 0 or self.t_end < 0:
            raise ConfigError("need dt > 0 and t_end >= 0")
        if self.cadence < 1:
            raise ConfigError("cadence must be >= 1")
        if self.threads < 1:
            raise ConfigError("threads must be >= 1")
        if self.envelope not in ("power", "gauss"):
            raise ConfigError(f"envelope must be 'power' or 'gauss', got {self.envelope!r}")
        ns = tuple(float(N) for N in self.N_list)
        if any(b <= a for a, b in zip(ns, ns[1:])):
            raise ConfigError(f"N_list must be strictly increasing, got {self.N_list}")
        for N in ns:
            if N <= 0 or abs(math.log2(N) - round(math.log2(N))) > 1e-9:
                raise ConfigError(f"N_list entries must be dyadic, got {N}")
        object.__setattr__(self, "N_list", ns)


def config_from_dict(data: dict, base: ExperimentConfig | None = None) -> ExperimentConfig:
    """Build a config from a JSON document; unknown keys are rejected."""
    known = set(ExperimentConfig.__dataclass_fields__)
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    fixed = dict(data)
    if "N_list" in fixed:
        fixed["N_list"] = tuple(fixed["N_list"])
    base = base if base is not None else ExperimentConfig()
    try:
        return replace(base, **fixed)
    except TypeError as err:
        raise ConfigError(str(err)) from err


def config_hash(cfg: ExperimentConfig) -> str:
    """Stable short hash of the result-determining configuration.

    Where outputs land (outdir) and how runs are scheduled (threads) do not
    change the numbers, so they stay out of the hash.
    """
    payload = {k: v for k, v in asdict(cfg).items() if k not in ("outdir", "threads")}
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------
# initial data
# ---------------------------------------------------------------------------

def make_datum(cfg: ExperimentConfig, grid: spec.Grid) -> spec.Field:
    """Seeded band-limited complex Gaussian datum, H^gamma-normalized."""
    rng = np.random.default_rng(cfg.seed)
    coeffs = rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape)
    if cfg.envelope == "power":
        slope = cfg.data_slope if cfg.data_slope is not None else cfg.gamma + cfg.d / 2.0
        coeffs *= (1.0 + grid.rho) ** (-slope)
    else:
        coeffs *= np.exp(-grid.rho2 / (2.0 * cfg.data_width**2))
    if cfg.band_limit is not None:
        coeffs = np.where(grid.rho <= cfg.band_limit, coeffs, 0.0)
    f = spec.inverse(grid, coeffs)
    scale = diag.sobolev_norm(f, cfg.gamma)
    return spec.Field(grid, cfg.amplitude * f.values / scale)


def make_bump_datum(cfg: ExperimentConfig, grid: spec.Grid) -> spec.Field:
    """Localized modulated Gaussian bump (для dispersive runs on a big box)."""
    x = grid.coordinate_axis()
    values = cfg.amplitude * np.exp(
        -0.5 * ((x - grid.ell / 2.0) / cfg.bump_width) ** 2
    ) * np.exp(1j * cfg.carrier * x)
    shape = values.astype(complex)
    for _ in range(grid.dim - 1):
        shape = np.multiply.outer(shape, np.ones(grid.n))
    return spec.Field(grid, shape)


def _delta_or_default(cfg: ExperimentConfig) -> float:
    if cfg.delta is not None:
        return cfg.delta
    return 0.9 * expo.delta_max(cfg.d, cfg.nu, cfg.gamma)


def hypothesis_window_label(cfg: ExperimentConfig) -> str:
    """'in-window' when (d, nu, gamma) sits in the analytical hypothesis window
    (5 <= d <= 11, mass-supercritical and energy-subcritical nu, gamma above
    the regularity threshold), else 'surrogate'."""
    try:
        if not 5 <= cfg.d <= 11:
            return "surrogate"
        if not 1.0 + 8.0 / cfg.d < cfg.nu < 1.0 + 8.0 / (cfg.d - 4.0):
            return "surrogate"
        if not expo.gamma_threshold(cfg.d, cfg.nu) < cfg.gamma < 2.0:
            return "surrogate"
    except expo.ExponentError:
        return "surrogate"
    return "in-window"


# ---------------------------------------------------------------------------
# persistence helpers
# ---------------------------------------------------------------------------

def _write(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def _json_ready(value):
    if isinstance(value, dict):
        return {k: _json_ready(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_ready(v) for v in value]
    if isinstance(value, (np.floating, np.integer)):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def write_summary(
    outdir: Path,
    cfg: ExperimentConfig,
    verdicts: dict,
    slopes: dict,
    errors: list[str],
    metrics: dict,
) -> dict:
    summary = {
        "experiment": cfg.experiment,
        "config_hash": config_hash(cfg),
        "verdicts": _json_ready(verdicts),
        "slopes": _json_ready(slopes),
        "errors": list(errors),
        "metrics": _json_ready(metrics),
    }
    _write(outdir / "summary.json", json.dumps(summary, sort_keys=True, indent=2) + "\n")
    return summary


def _fmt(value: float) -> str:
    return repr(float(value))


# ---------------------------------------------------------------------------
# recipes
# ---------------------------------------------------------------------------

def run_conservation(cfg: ExperimentConfig) -> dict:
    """Mass conservation to roundoff plus the second-order energy-drift ratio.

    Runs the configured step size and its half; passes when the relative
    mass drift stays below 1e-10 and the max-energy-drift ratio between the
    two runs lies in [3.5, 4.5].
    """
    grid = spec.make_grid(cfg.d, cfg.n, cfg.ell)
    datum = make_datum(cfg, grid)
    observers = {
        "mass": lambda f, t: diag.mass(f),
        "energy": lambda f, t: diag.energy(f, cfg.nu),
    }

    def one(dt: float) -> tuple[Trajectory, float, float]:
        scfg = SolverConfig(
            nu=cfg.nu, dt=dt, t_end=cfg.t_end, sample_every=cfg.cadence,
            blowup_ceiling=cfg.blowup_ceiling,
        )
        traj = evolve(datum, scfg, observers)
        masses = [row["mass"] for row in traj.rows]
        energies = [row["energy"] for row in traj.rows]
        mass_drift = max(abs(m - masses[0]) for m in masses) / masses[0]
        energy_drift = max(abs(e - energies[0]) for e in energies)
        return traj, mass_drift, energy_drift

    traj, mass_drift, drift_full = one(cfg.dt)
    _, _, drift_half = one(cfg.dt / 2.0)
    ratio = drift_full / drift_half if drift_half > 0 else math.inf

    outdir = Path(cfg.outdir)
    _write(outdir / "conservation.csv", diag.rows_to_csv(traj.rows))
    verdicts = {
        "mass_conserved": bool(mass_drift < 1e-10),
        "energy_ratio_second_order": bool(3.5 <= ratio <= 4.5),
    }
    metrics = {
        "mass_drift_rel": mass_drift,
        "energy_drift_dt": drift_full,
        "energy_drift_half_dt": drift_half,
        "energy_drift_ratio": ratio,
        "window": hypothesis_window_label(cfg),
    }
    return write_summary(outdir, cfg, verdicts, {}, [], metrics)


@dataclass(frozen=True)
class SweepEntry:
    N: float
    drift: float
    m_sigma: float | None
    included: bool
    csv_path: str


@dataclass(frozen=True)
class SweepResult:
    """Per-N drifts of the modified energy plus the fitted decay law."""

    entries: tuple[SweepEntry, ...]
    slope: float
    intercept: float
    monotone: bool
    verdict: bool
    errors: tuple[str, ...] = ()


def sweep_verdict(
    ns: list[float], drifts: list[float], slack: float = 0.05
) -> tuple[float, float, bool, bool]:
    """Fit log(drift) against log(N); pure function of the sweep numbers.

    Returns (slope, intercept, monotone, ok): monotone allows each drift to
    exceed its predecessor by at most the slack fraction.
    """
    if len(ns) < 2:
        raise ConfigError("need at least two N values with positive drift")
    if any(d <= 0 for d in drifts):
        raise ConfigError("drifts must be positive for the log-log fit")
    slope, intercept = np.polyfit(np.log(ns), np.log(drifts), 1)
    monotone = all(
        b <= a * (1.0 + slack) for a, b in zip(drifts, drifts[1:])
    )
    return float(slope), float(intercept), monotone, bool(slope < 0.0 and monotone)


def _sweep_single(cfg: ExperimentConfig, grid: spec.Grid, base: spec.Field, N: float):
    """One almost-conservation run: normalize the smoothed datum, evolve, drift."""
    smoothed = spec.apply_multiplier(base, spec.MultiplierSpec.i_smoothing(N, cfg.gamma))
    scale = diag.sobolev_norm(smoothed, 2.0)
    datum = spec.Field(grid, base.values / scale)
    observers = diag.standard_observers(cfg.nu, N, cfg.gamma, cfg.sigma)
    scfg = SolverConfig(
        nu=cfg.nu, dt=cfg.dt, t_end=cfg.t_end, sample_every=cfg.cadence,
        store_fields=True, blowup_ceiling=cfg.blowup_ceiling,
    )
    traj = evolve(datum, scfg, observers)
    series = [row["modified_energy"] for row in traj.rows]
    drift = max(abs(e - series[0]) for e in series)
    m_sigma = None
    try:
        m_sigma = diag.m_sigma_norm(traj, cfg.sigma, cfg.d)
    except (expo.ExponentError, ValueError):
        pass
    return drift, m_sigma, traj


def run_almost_conservation_sweep(cfg: ExperimentConfig) -> SweepResult:
    """Max modified-energy drift across the dyadic N grid, with verdict.

    The datum is rescaled per N so the smoothed state has unit H^2 norm (the
    almost-conservation hypothesis); N values at or above the grid's top
    frequency make the smoothing operator the identity and are excluded from
    the regression.  Runs execute concurrently (cfg.threads) and aggregate
    in N order; a blow-up aborts with partial results persisted.
    """
    grid = spec.make_grid(cfg.d, cfg.n, cfg.ell)
    base = make_datum(cfg, grid)
    outdir = Path(cfg.outdir)
    errors: list[str] = []

    included = [N for N in cfg.N_list if N < grid.max_rho]
    excluded = [N for N in cfg.N_list if N >= grid.max_rho]

    results: dict[float, tuple] = {}

    def job(N: float):
        return N, _sweep_single(cfg, grid, base, N)

    try:
        if cfg.threads > 1:
            with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
                for N, out in pool.map(job, included):
                    results[N] = out
        else:
            for N in included:
                results[N] = job(N)[1]
    except BlowupError as err:
        errors.append(str(err))

    entries: list[SweepEntry] = []
    for N in cfg.N_list:
        if N in results:
            drift, m_sigma, traj = results[N]
            path = outdir / f"run_N{int(N)}.csv"
            _write(path, diag.rows_to_csv(traj.rows))
            entries.append(SweepEntry(N, drift, m_sigma, True, str(path)))
        elif N in excluded:
            entries.append(SweepEntry(N, 0.0, None, False, ""))

    fitted = [(e.N, e.drift) for e in entries if e.included and e.drift > 0]
    if len(fitted) >= 2 and not errors:
        slope, intercept, monotone, ok = sweep_verdict(
            [n for n, _ in fitted], [d for _, d in fitted]
        )
    else:
        slope, intercept, monotone, ok = math.nan, math.nan, False, False
        if not errors:
            errors.append("not enough positive-drift runs for the regression")

    sweep_csv = ["N,max_drift"]
    for n_val, d_val in fitted:
        sweep_csv.append(f"{_fmt(n_val)},{_fmt(d_val)}")
    _write(outdir / "sweep.csv", "\n".join(sweep_csv) + "\n")

    mu_report = {
        str(int(e.N)): e.m_sigma for e in entries if e.included
    }
    write_summary(
        outdir, cfg,
        verdicts={"drift_decays": ok, "monotone": monotone},
        slopes={"sweep": slope, "intercept": intercept},
        errors=errors,
        metrics={
            "drifts": {str(int(e.N)): e.drift for e in entries if e.included},
            "excluded_N": [int(n) for n in excluded],
            "m_sigma": mu_report,
            "mu_bound": cfg.mu,
            "delta": _delta_or_default(cfg),
            "window": hypothesis_window_label(cfg),
        },
    )
    return SweepResult(tuple(entries), slope, intercept, monotone, ok, tuple(errors))


def run_operator_suite(cfg: ExperimentConfig) -> dict:
    """Frequency-operator property checks with measured constants.

    Covers the dyadic partition identity, the derivative-vs-scale ratios on
    dyadic annuli, the smoothing symbol's plateau/tail exactness with its
    monotonicity, and the smoothing sandwich spread over N in {4..256}.
    """
    grid = spec.make_grid(cfg.d, cfg.n, cfg.ell)
    f = spec.random_field(grid, cfg.seed, spectral_slope=1.0)
    report: dict = {}

    residual = 0.0
    for M in spec.resolvable_dyadic_scales(grid):
        low = spec.lp_project(f, M, "low")
        high = spec.lp_project(f, M, "high")
        gap = spec.Field(grid, low.values + high.values - f.values)
        residual = max(residual, diag.lebesgue_norm(gap, 2.0))
    report["lp_partition_residual"] = residual
    report["lp_partition_ok"] = bool(residual < 1e-12)

    bern: dict[str, tuple[float, float]] = {}
    bern_ok = True
    for M in spec.resolvable_dyadic_scales(grid):
        annulus = (grid.rho > M / 2.0) & (grid.rho < 2.0 * M)
        if not annulus.any():
            continue
        rng = np.random.default_rng(cfg.seed + int(math.log2(M)))
        coeffs = np.where(
            annulus,
            rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape),
            0.0,
        )
        g = spec.inverse(grid, coeffs)
        for s in (0.5, 1.0, 2.0):
            proj = spec.lp_project(g, M, "band")
            deriv = spec.apply_multiplier(proj, spec.MultiplierSpec.fractional(s))
            denom = M**s * diag.lebesgue_norm(proj, 2.0)
            ratio = diag.lebesgue_norm(deriv, 2.0) / denom
            bern[f"M{int(M)}_s{s}"] = ratio
            bern_ok = bern_ok and 2.0**-s <= ratio <= 2.0**s
    report["bernstein_ratios"] = bern
    report["bernstein_ok"] = bern_ok

    # plateau/tail exactness at single modes, plus profile monotonicity
    n1 = max(cfg.n, 2048)
    line = spec.make_grid(1, n1, 2.0 * math.pi)
    plateau_err = 0.0
    tail_err = 0.0
    for N in (4.0, 8.0, 16.0):
        inside = spec.plane_wave(line, (int(N) // 2,))
        outside = spec.plane_wave(line, (4 * int(N),))
        op = spec.MultiplierSpec.i_smoothing(N, cfg.gamma)
        a = spec.apply_multiplier(inside, op)
        b = spec.apply_multiplier(outside, op)
        plateau_err = max(plateau_err, float(np.max(np.abs(a.values - inside.values))))
        expected = 4.0 ** (cfg.gamma - 2.0)
        tail_err = max(
            tail_err, float(np.max(np.abs(b.values - expected * outside.values)))
        )
    radii = np.linspace(0.0, 12.0 * 16.0, 4001)
    profile = spec.i_symbol_profile(radii, 16.0, cfg.gamma)
    monotone = bool(np.all(np.diff(profile) <= 1e-15))
    report["i_plateau_error"] = plateau_err
    report["i_tail_error"] = tail_err
    report["i_symbol_monotone"] = monotone
    report["i_pointwise_ok"] = bool(plateau_err < 1e-12 and tail_err < 1e-12 and monotone)

    # sandwich spread: balanced spectral slope (3 + gamma)/2 keeps both
    # inequalities active across the whole N grid
    sandwich_field = spec.random_field(
        line, cfg.seed, spectral_slope=(3.0 + cfg.gamma) / 2.0
    )
    h_gamma = diag.sobolev_norm(sandwich_field, cfg.gamma)
    lower, upper = [], []
    for N in (4.0, 8.0, 16.0, 32.0, 64.0, 128.0, 256.0):
        smoothed = spec.apply_multiplier(
            sandwich_field, spec.MultiplierSpec.i_smoothing(N, cfg.gamma)
        )
        h2 = diag.sobolev_norm(smoothed, 2.0)
        lower.append(h_gamma / h2)
        upper.append(h2 / (N ** (2.0 - cfg.gamma) * h_gamma))
    spread_lower = max(lower) / min(lower)
    spread_upper = max(upper) / min(upper)
    report["sandwich_spread_lower"] = spread_lower
    report["sandwich_spread_upper"] = spread_upper
    report["sandwich_ok"] = bool(spread_lower <= 4.0 and spread_upper <= 4.0)

    ok = bool(
        report["lp_partition_ok"] and report["bernstein_ok"]
        and report["i_pointwise_ok"] and report["sandwich_ok"]
    )
    outdir = Path(cfg.outdir)
    write_summary(
        outdir, cfg,
        verdicts={
            "lp_partition": report["lp_partition_ok"],
            "bernstein": report["bernstein_ok"],
            "i_pointwise": report["i_pointwise_ok"],
            "sandwich": report["sandwich_ok"],
            "all": ok,
        },
        slopes={},
        errors=[],
        metrics=report,
    )
    report["ok"] = ok
    return report


def run_table1(outdir: str | Path) -> list[dict]:
    """Threshold-table reproduction: CSV plus per-row absolute errors."""
    rows = expo.table1_rows()
    lines = ["nu,d,gamma_c,paper_value,computed,abs_error"]
    for row in rows:
        lines.append(
            f"{row['nu']},{row['d']},{row['gamma_c']},"
            f"{_fmt(row['paper_value'])},{_fmt(row['computed'])},{_fmt(row['abs_error'])}"
        )
    _write(Path(outdir) / "table1.csv", "\n".join(lines) + "\n")
    return rows


def run_scattering(cfg: ExperimentConfig) -> dict:
    """Free-flow pullback residuals over dyadic time pairs.

    The verdict needs strictly decreasing residuals along
    (T/8, T/4), (T/4, T/2), (T/2, T), a zero-nonlinearity surrogate whose
    residual vanishes to roundoff, and the rescaled datum's modified energy
    dropping below the original's.
    """
    grid = spec.make_grid(cfg.d, cfg.n, cfg.ell)
    datum = make_bump_datum(cfg, grid)
    T = cfg.t_end
    quarters = [T / 8.0, T / 4.0, T / 2.0, T]
    # sampling every T/(8 dt) steps lands exactly on the dyadic times
    steps_eighth = int(round(T / 8.0 / cfg.dt))
    scfg = SolverConfig(
        nu=cfg.nu, dt=cfg.dt, t_end=T, sample_every=max(1, steps_eighth),
        store_fields=True, blowup_ceiling=cfg.blowup_ceiling,
    )
    traj = evolve(datum, scfg, {"mass": lambda f, t: diag.mass(f)})
    pairs = list(zip(quarters[:-1], quarters[1:]))
    residuals = [diag.scattering_residual(traj, cfg.gamma, a, b) for a, b in pairs]
    decreasing = all(b < a for a, b in zip(residuals, residuals[1:]))

    # zero-nonlinearity surrogate: the disabled-kick flow is exactly the free
    # flow, so sample it through its exact flow map
    linear_traj = Trajectory(
        grid,
        [0.0] + quarters,
        [{} for _ in range(len(quarters) + 1)],
        [datum] + [free_propagate(datum, t) for t in quarters],
    )
    linear_residual = max(
        diag.scattering_residual(linear_traj, cfg.gamma, a, b) for a, b in pairs
    )

    # rescaling shrinks the smoothed energy when gamma < 2
    N_ref = cfg.N_list[-1]
    lam = expo.lambda_of_N(
        N_ref, cfg.gamma, expo.critical_exponent(cfg.d, cfg.nu)
    )
    me_base = diag.modified_energy(datum, cfg.nu, N_ref, cfg.gamma)
    me_rescaled = diag.modified_energy(
        rescale(datum, lam, cfg.nu), cfg.nu, N_ref, cfg.gamma
    )

    outdir = Path(cfg.outdir)
    lines = ["t1,t2,residual"]
    for (a, b), r in zip(pairs, residuals):
        lines.append(f"{_fmt(a)},{_fmt(b)},{_fmt(r)}")
    _write(outdir / "scattering.csv", "\n".join(lines) + "\n")

    verdicts = {
        "residual_decreasing": bool(decreasing),
        "linear_pullback_constant": bool(linear_residual < 1e-12),
        "rescaled_energy_smaller": bool(me_rescaled < me_base),
    }
    metrics = {
        "residuals": residuals,
        "pairs": pairs,
        "linear_residual": linear_residual,
        "lambda": lam,
        "modified_energy_base": me_base,
        "modified_energy_rescaled": me_rescaled,
        "window": hypothesis_window_label(cfg),
    }
    return write_summary(outdir, cfg, verdicts, {}, [], metrics)


# tuned default configurations, frozen by the acceptance suite
PRESETS: dict[str, ExperimentConfig] = {
    "conservation": ExperimentConfig(
        experiment="conservation", d=1, n=256, nu=3.0, gamma=2.0,
        envelope="gauss", data_width=3.0, band_limit=6.0, amplitude=10.0,
        dt=2e-4, t_end=0.5, cadence=5, seed=42,
    ),
    "sweep": ExperimentConfig(
        experiment="sweep", d=1, n=256, nu=3.0, gamma=1.5, sigma=0.5,
        envelope="power", dt=5e-4, t_end=2.0, cadence=20,
        N_list=(8.0, 16.0, 32.0, 64.0), seed=11,
    ),
    "sweep_heavy": ExperimentConfig(
        experiment="sweep_heavy", d=5, n=16, nu=3.0, gamma=1.5, sigma=0.5,
        envelope="power", dt=1e-3, t_end=0.1, cadence=10,
        N_list=(2.0, 4.0), seed=5,
    ),
    "operator_suite": ExperimentConfig(
        experiment="operator_suite", d=1, n=256, gamma=1.5, seed=3,
    ),
    "scattering": ExperimentConfig(
        experiment="scattering", d=1, n=8192, ell=400.0, nu=7.0, gamma=1.5,
        amplitude=0.8, carrier=2.0, bump_width=1.0,
        dt=1e-3, t_end=1.0, cadence=125, N_list=(64.0,), seed=0,
    ),
}
