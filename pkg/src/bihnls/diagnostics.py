"""Functionals of fields and trajectories.

Spatial norms are grid quadrature with cell volume (ell/n)^dim; Sobolev norms
weight the unitary spectral coefficients, with the convention that the
inhomogeneous bracket uses the symbol (1 + |xi|^2)^(s/2).  Time integration of
space-time norms is trapezoidal on the sampled cadence, and L^infinity in time
is the max over samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import exponents
from .dynamics import Trajectory, free_propagate
from .spectral import Field, MultiplierSpec, apply_multiplier, forward

#: mandatory leading columns of the diagnostics CSV
CSV_COLUMNS = (
    "t",
    "mass",
    "energy",
    "modified_energy",
    "h_gamma",
    "hdot_half",
    "hdot_sigma",
    "l_nu1",
)


@dataclass(frozen=True)
class DiagnosticsRow:
    """One sampled time's worth of functionals; extras are keyed by name."""

    t: float
    mass: float
    energy: float
    modified_energy: float
    h_gamma: float
    hdot_half: float
    hdot_sigma: float
    l_nu1: float
    extras: dict = field(default_factory=dict)

    @classmethod
    def from_mapping(cls, row: dict) -> "DiagnosticsRow":
        extras = {k: v for k, v in row.items() if k not in CSV_COLUMNS}
        return cls(*(row[c] for c in CSV_COLUMNS), extras=extras)

    def to_mapping(self) -> dict:
        base = {c: getattr(self, c) for c in CSV_COLUMNS}
        base.update(self.extras)
        return base


# ---------------------------------------------------------------------------
# pointwise-in-time functionals
# ---------------------------------------------------------------------------

def mass(f: Field) -> float:
    """Quadrature L^2 mass: integral of |u|^2."""
    return f.grid.cell_volume * float(np.sum(np.abs(f.values) ** 2))


def energy(f: Field, nu: float) -> float:
    """Conserved energy: integral of |Delta u|^2 / 2 + |u|^(nu+1)/(nu+1).

    The Laplacian is spectral; both terms are then quadrature sums.
    """
    lap = apply_multiplier(f, MultiplierSpec.fractional(2.0))
    kinetic = 0.5 * f.grid.cell_volume * float(np.sum(np.abs(lap.values) ** 2))
    potential = f.grid.cell_volume * float(np.sum(np.abs(f.values) ** (nu + 1.0)))
    return kinetic + potential / (nu + 1.0)


def modified_energy(f: Field, nu: float, N: float, gamma: float) -> float:
    """Energy of the frequency-smoothed state.

    Coincides with the plain energy whenever every active mode sits below
    the smoothing cutoff.
    """
    return energy(apply_multiplier(f, MultiplierSpec.i_smoothing(N, gamma)), nu)


def lebesgue_norm(f: Field, q: float) -> float:
    """Quadrature L^q norm; q = inf is the max over samples."""
    if q == math.inf:
        return float(np.max(np.abs(f.values)))
    if q < 1:
        raise ValueError(f"Lebesgue exponent must be >= 1, got {q}")
    return (f.grid.cell_volume * float(np.sum(np.abs(f.values) ** q))) ** (1.0 / q)


def sobolev_norm(f: Field, s: float, homogeneous: bool = False) -> float:
    """Spectral Sobolev norm of order s.

    Homogeneous norms of negative order project out the mean, matching the
    fractional-multiplier convention.
    """
    coeffs2 = np.abs(forward(f)) ** 2
    if homogeneous:
        if s == 0.0:
            weight = np.ones_like(f.grid.rho2)
        else:
            weight = np.zeros_like(f.grid.rho2)
            nz = f.grid.rho2 > 0.0
            weight[nz] = f.grid.rho2[nz] ** s
    else:
        weight = (1.0 + f.grid.rho2) ** s
    return math.sqrt(f.grid.cell_volume * float(np.sum(weight * coeffs2)))


# ---------------------------------------------------------------------------
# space-time functionals
# ---------------------------------------------------------------------------

def _require_snapshots(traj: Trajectory) -> list[Field]:
    if traj.fields is None:
        raise ValueError("this functional needs a trajectory with stored snapshots")
    return traj.fields


def _time_lp(times: list[float], values: np.ndarray, p: float) -> float:
    if p == math.inf:
        return float(np.max(values))
    if len(times) < 2:
        return 0.0
    return float(np.trapezoid(values**p, np.asarray(times)) ** (1.0 / p))


def spacetime_norm(traj: Trajectory, p: float, q: float) -> float:
    """Mixed L^p_t L^q_x norm over the sampled trajectory."""
    fields = _require_snapshots(traj)
    spatial = np.array([lebesgue_norm(f, q) for f in fields])
    return _time_lp(traj.times, spatial, p)


def m_sigma_norm(traj: Trajectory, sigma: float, d: int | None = None) -> float:
    """Interpolated space-time norm with the (sigma, d)-determined exponents."""
    d_eff = traj.grid.dim if d is None else d
    p, q = exponents.m_sigma_exponents(d_eff, sigma)
    return spacetime_norm(traj, p, q)


def morawetz_norm(traj: Trajectory, d: int | None = None) -> float:
    """L^4_t L^4_x norm of the |xi|^(-(d-5)/4)-weighted trajectory.

    At d = 5 the weight is the identity; for d > 5 the weight's zero mode is
    projected out, so spatially constant states score zero.
    """
    fields = _require_snapshots(traj)
    d_eff = traj.grid.dim if d is None else d
    weight = MultiplierSpec.morawetz_weight(d_eff)
    spatial = np.array(
        [lebesgue_norm(apply_multiplier(f, weight), 4.0) for f in fields]
    )
    return _time_lp(traj.times, spatial, 4.0)


def z_i_norm(
    traj: Trajectory,
    N: float,
    gamma: float,
    pair_family: list[tuple[float, float]] | None = None,
    d: int | None = None,
) -> float:
    """Sup over a finite admissible-pair family of the smoothed Strichartz norm.

    Applies the bracket Laplacian (1 + |xi|^2) after the smoothing operator,
    then maximizes the mixed norm over the family (defaults to the
    deterministic family built from the zero-scaling rule).
    """
    fields = _require_snapshots(traj)
    d_eff = traj.grid.dim if d is None else d
    family = pair_family if pair_family is not None else exponents.default_biharmonic_family(d_eff)
    if not family:
        raise ValueError(f"empty admissible-pair family at d={d_eff}")
    smooth = MultiplierSpec.i_smoothing(N, gamma)
    bracket = MultiplierSpec.bracket(2.0)
    transformed = [
        apply_multiplier(apply_multiplier(f, smooth), bracket) for f in fields
    ]
    dressed = Trajectory(traj.grid, list(traj.times), [{} for _ in traj.times], transformed)
    return max(spacetime_norm(dressed, p, q) for p, q in family)


def scattering_residual(traj: Trajectory, gamma: float, t1: float, t2: float) -> float:
    """H^gamma distance of the free-flow pullbacks at two sample times.

    Identically zero (to roundoff) along a purely linear evolution; decay
    along the nonlinear flow is the numerical signature of scattering.
    """
    v1 = free_propagate(traj.field_at(t1), -t1)
    v2 = free_propagate(traj.field_at(t2), -t2)
    diff = Field(v1.grid, v2.values - v1.values)
    return sobolev_norm(diff, gamma)


def morawetz_interpolation_ratio(traj: Trajectory, sigma: float, d: int | None = None) -> float:
    """Measured constant of the interpolated a priori space-time bound.

    Ratio of the interpolated norm to the mass/Sobolev product that bounds
    it on the whole space; recorded (not asserted) on periodic surrogates.
    """
    fields = _require_snapshots(traj)
    d_eff = traj.grid.dim if d is None else d
    num = m_sigma_norm(traj, sigma, d_eff)
    mass0 = math.sqrt(mass(fields[0]))
    sup_half = max(sobolev_norm(f, 0.5, homogeneous=True) for f in fields)
    sup_sigma = max(sobolev_norm(f, sigma, homogeneous=True) for f in fields)
    base = d_eff - 5.0 + 4.0 * sigma
    den = (mass0 * sup_half) ** (2.0 * sigma / base) * sup_sigma ** ((d_eff - 5.0) / base)
    if den == 0.0:
        return math.inf if num > 0.0 else 0.0
    return num / den


# ---------------------------------------------------------------------------
# observers and CSV export
# ---------------------------------------------------------------------------

def standard_observers(nu: float, N: float, gamma: float, sigma: float) -> dict:
    """The canonical diagnostics row as named observers for the integrator."""
    return {
        "mass": lambda f, t: mass(f),
        "energy": lambda f, t: energy(f, nu),
        "modified_energy": lambda f, t: modified_energy(f, nu, N, gamma),
        "h_gamma": lambda f, t: sobolev_norm(f, gamma),
        "hdot_half": lambda f, t: sobolev_norm(f, 0.5, homogeneous=True),
        "hdot_sigma": lambda f, t: sobolev_norm(f, sigma, homogeneous=True),
        "l_nu1": lambda f, t: lebesgue_norm(f, nu + 1.0),
    }


def rows_to_csv(rows: list) -> str:
    """Render diagnostics rows with the fixed column order (header mandatory).

    Rows may be mappings or DiagnosticsRow records.  Extra observer columns
    follow the fixed ones in sorted order; floats are rendered with shortest
    round-trip representation so identical runs give identical bytes.
    """
    rows = [r.to_mapping() if isinstance(r, DiagnosticsRow) else r for r in rows]
    extras = sorted({k for row in rows for k in row} - set(CSV_COLUMNS))
    columns = [c for c in CSV_COLUMNS if any(c in row for row in rows) or c == "t"]
    columns += extras
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(_render(row.get(c)) for c in columns))
    return "\n".join(lines) + "\n"


def _render(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)
