"""Periodic grids, unitary spectral transforms, and radial Fourier multipliers.

The canonical state representation is physical space: a ``Field`` is a complex
sample per lattice point.  All operators here are diagonal in frequency and
applied as forward transform, symbol multiply, inverse transform, with the
unitary ("ortho") FFT normalization so Parseval is exact at the coefficient
level.  Quadrature norms carry the cell volume ``(ell/n)**dim``.

Operators are pure: input fields are never mutated and ``Field.values`` is
write-protected, so fields are safe to share across threads.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

DEFAULT_POINT_BUDGET = 2**21
POINT_BUDGET_ENV = "BIHNLS_POINT_BUDGET"


class GridError(ValueError):
    """Base class for grid construction failures."""


class PointBudgetError(GridError):
    """Total lattice size exceeds the configured point budget."""


class ResolutionError(GridError):
    """Bad dimension or per-axis resolution (odd, too small, non-integer)."""


class BoxError(GridError):
    """Non-positive or non-finite box side length."""


class FieldError(ValueError):
    """Field payload is malformed (wrong shape, non-finite entries)."""


class MultiplierError(ValueError):
    """Invalid multiplier parameters for this grid."""


def point_budget() -> int:
    """Active lattice-size budget; the environment variable wins."""
    raw = os.environ.get(POINT_BUDGET_ENV)
    if raw is None:
        return DEFAULT_POINT_BUDGET
    try:
        value = int(raw)
    except ValueError as err:
        raise GridError(f"{POINT_BUDGET_ENV} must be an integer, got {raw!r}") from err
    if value <= 0:
        raise GridError(f"{POINT_BUDGET_ENV} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Grid:
    """Cubic periodic lattice and its dual frequency lattice.

    Frequencies per axis are ``(2*pi/ell) * k`` with integer ``k`` in
    ``[-n/2, n/2)`` in FFT ordering.  Use :func:`make_grid` for a validated
    constructor.
    """

    dim: int
    n: int
    ell: float

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.n,) * self.dim

    @property
    def num_points(self) -> int:
        return self.n**self.dim

    @property
    def spacing(self) -> float:
        return self.ell / self.n

    @property
    def cell_volume(self) -> float:
        return self.spacing**self.dim

    @property
    def volume(self) -> float:
        return self.ell**self.dim

    @property
    def nyquist(self) -> float:
        """Largest per-axis frequency magnitude resolved by the lattice."""
        return (2.0 * math.pi / self.ell) * (self.n // 2)

    @cached_property
    def freq_axis(self) -> np.ndarray:
        """Per-axis frequencies in FFT ordering."""
        k = np.fft.fftfreq(self.n, d=1.0 / self.n)
        return (2.0 * math.pi / self.ell) * k

    @cached_property
    def rho2(self) -> np.ndarray:
        """Squared frequency magnitude |xi|^2 on the full lattice."""
        out = np.zeros(self.shape)
        ax2 = self.freq_axis**2
        for axis in range(self.dim):
            reshape = [1] * self.dim
            reshape[axis] = self.n
            out = out + ax2.reshape(reshape)
        return out

    @cached_property
    def rho(self) -> np.ndarray:
        """Frequency magnitude |xi| on the full lattice."""
        return np.sqrt(self.rho2)

    @property
    def max_rho(self) -> float:
        return math.sqrt(self.dim) * self.nyquist

    def coordinate_axis(self) -> np.ndarray:
        """Physical sample positions along one axis."""
        return self.spacing * np.arange(self.n)


def make_grid(dim: int, n: int, ell: float, budget: int | None = None) -> Grid:
    """Validated grid constructor.

    Distinct error types: ResolutionError for bad dim/n, BoxError for bad
    ell, PointBudgetError when n**dim exceeds the budget (default 2**21,
    overridable via the BIHNLS_POINT_BUDGET environment variable).
    """
    if not isinstance(dim, (int, np.integer)) or not 1 <= dim <= 7:
        raise ResolutionError(f"dimension must be an integer in [1, 7], got {dim}")
    if not isinstance(n, (int, np.integer)) or n < 8 or n % 2 != 0:
        raise ResolutionError(f"points per axis must be even and >= 8, got {n}")
    if not (isinstance(ell, (int, float, np.floating)) and math.isfinite(ell) and ell > 0):
        raise BoxError(f"box side must be positive and finite, got {ell}")
    limit = budget if budget is not None else point_budget()
    if n**dim > limit:
        raise PointBudgetError(
            f"{n}**{dim} = {n**dim} lattice points exceeds the budget {limit}"
        )
    return Grid(int(dim), int(n), float(ell))


@dataclass(frozen=True)
class Field:
    """Complex state sampled on a grid (physical space, immutable)."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.complex128)
        if values.shape != self.grid.shape:
            raise FieldError(
                f"values shape {values.shape} does not match grid shape {self.grid.shape}"
            )
        if not np.all(np.isfinite(values.view(np.float64))):
            raise FieldError("field values must be finite")
        values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @staticmethod
    def zeros(grid: Grid) -> "Field":
        return Field(grid, np.zeros(grid.shape, dtype=np.complex128))


def plane_wave(grid: Grid, k_index: tuple[int, ...], amplitude: complex = 1.0) -> Field:
    """The sampled mode ``amplitude * exp(i xi . x)`` for integer index k."""
    if len(k_index) != grid.dim:
        raise FieldError(f"mode index needs {grid.dim} entries, got {len(k_index)}")
    x = grid.coordinate_axis()
    values = np.full(grid.shape, amplitude, dtype=np.complex128)
    for axis, k in enumerate(k_index):
        xi = (2.0 * math.pi / grid.ell) * k
        phase = np.exp(1j * xi * x)
        reshape = [1] * grid.dim
        reshape[axis] = grid.n
        values = values * phase.reshape(reshape)
    return Field(grid, values)


def mode_frequency(grid: Grid, k_index: tuple[int, ...]) -> float:
    """|xi| of the lattice mode with integer index k."""
    return (2.0 * math.pi / grid.ell) * math.sqrt(sum(k * k for k in k_index))


def forward(f: Field) -> np.ndarray:
    """Unitary spectral coefficients of a field."""
    return np.fft.fftn(f.values, norm="ortho")


def inverse(grid: Grid, coeffs: np.ndarray) -> Field:
    """Field with the given unitary spectral coefficients."""
    return Field(grid, np.fft.ifftn(coeffs, norm="ortho"))


def random_field(
    grid: Grid,
    seed: int,
    band_limit: float | None = None,
    spectral_slope: float = 0.0,
) -> Field:
    """Seeded complex Gaussian field with an optional power-law envelope.

    Spectral coefficients are iid standard complex Gaussians damped by
    ``(1 + |xi|)**(-spectral_slope)`` and zeroed beyond ``band_limit``.
    """
    rng = np.random.default_rng(seed)
    coeffs = rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape)
    if spectral_slope != 0.0:
        coeffs = coeffs * (1.0 + grid.rho) ** (-spectral_slope)
    if band_limit is not None:
        coeffs = np.where(grid.rho <= band_limit, coeffs, 0.0)
    return inverse(grid, coeffs)


# ---------------------------------------------------------------------------
# radial symbol profiles
# ---------------------------------------------------------------------------

def _smoothstep(t: np.ndarray) -> np.ndarray:
    """Clamped cubic 3t^2 - 2t^3."""
    t = np.clip(t, 0.0, 1.0)
    return t * t * (3.0 - 2.0 * t)


def i_symbol_profile(rho, N: float, gamma: float):
    """Smoothing symbol: 1 up to N, (|xi|/N)^(gamma-2) beyond 2N.

    The transition on (N, 2N) is the exact power profile with a cubic
    smoothstep exponent blend in log2(|xi|/N): C1, non-increasing, and it
    matches both endpoint formulas exactly.
    """
    if not 0.0 <= gamma < 2.0:
        raise MultiplierError(f"smoothing order gamma must be in [0, 2), got {gamma}")
    if N <= 0:
        raise MultiplierError(f"smoothing cutoff N must be positive, got {N}")
    r = np.asarray(rho, dtype=float) / N
    scalar = r.ndim == 0
    r = np.atleast_1d(r)
    if np.any(r < 0):
        raise MultiplierError("radii must be non-negative")
    out = np.ones_like(r)
    tail = r >= 2.0
    out[tail] = r[tail] ** (gamma - 2.0)
    mid = (r > 1.0) & ~tail
    if mid.any():
        blend = _smoothstep(np.log2(r[mid]))
        out[mid] = r[mid] ** ((gamma - 2.0) * blend)
    return float(out[0]) if scalar else out


def bump_profile(r):
    """Radial cutoff: 1 on r <= 1, 0 on r >= 2, cubic blend in log2 r between."""
    r = np.asarray(r, dtype=float)
    scalar = r.ndim == 0
    r = np.atleast_1d(r)
    out = np.ones_like(r)
    out[r >= 2.0] = 0.0
    mid = (r > 1.0) & (r < 2.0)
    if mid.any():
        out[mid] = 1.0 - _smoothstep(np.log2(r[mid]))
    return float(out[0]) if scalar else out


def _validate_dyadic(M: float) -> float:
    if M <= 0 or not math.isfinite(M):
        raise MultiplierError(f"dyadic scale must be positive, got {M}")
    k = math.log2(M)
    if abs(k - round(k)) > 1e-9:
        raise MultiplierError(f"scale {M} is not a power of two")
    return float(M)


# ---------------------------------------------------------------------------
# multiplier specifications
# ---------------------------------------------------------------------------

_KINDS = (
    "biharmonic_phase",
    "fractional",
    "bracket",
    "lp_low",
    "lp_high",
    "lp_band",
    "i_smoothing",
    "morawetz_weight",
)


@dataclass(frozen=True)
class MultiplierSpec:
    """A radial Fourier-symbol description.

    Construct through the classmethods; ``sample`` evaluates the symbol on a
    grid's frequency lattice.  Every kind except the propagator phase has a
    real radial symbol; the phase is unimodular.
    """

    kind: str
    t: float = 0.0
    s: float = 0.0
    M: float = 0.0
    N: float = 0.0
    gamma: float = 0.0
    d: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise MultiplierError(f"unknown multiplier kind {self.kind!r}")

    @classmethod
    def biharmonic_phase(cls, t: float) -> "MultiplierSpec":
        """Free-flow phase exp(i t |xi|^4)."""
        return cls("biharmonic_phase", t=float(t))

    @classmethod
    def fractional(cls, s: float) -> "MultiplierSpec":
        """|xi|^s; for s < 0 the zero mode is projected out."""
        return cls("fractional", s=float(s))

    @classmethod
    def bracket(cls, s: float) -> "MultiplierSpec":
        """(1 + |xi|^2)^(s/2)."""
        return cls("bracket", s=float(s))

    @classmethod
    def lp_low(cls, M: float) -> "MultiplierSpec":
        return cls("lp_low", M=_validate_dyadic(M))

    @classmethod
    def lp_high(cls, M: float) -> "MultiplierSpec":
        return cls("lp_high", M=_validate_dyadic(M))

    @classmethod
    def lp_band(cls, M: float) -> "MultiplierSpec":
        return cls("lp_band", M=_validate_dyadic(M))

    @classmethod
    def i_smoothing(cls, N: float, gamma: float) -> "MultiplierSpec":
        if N <= 0:
            raise MultiplierError(f"smoothing cutoff N must be positive, got {N}")
        if not 0.0 <= gamma < 2.0:
            raise MultiplierError(f"gamma must be in [0, 2), got {gamma}")
        return cls("i_smoothing", N=float(N), gamma=float(gamma))

    @classmethod
    def morawetz_weight(cls, d: int) -> "MultiplierSpec":
        """|xi|^(-(d-5)/4), the weight of the interaction space-time bound."""
        return cls("morawetz_weight", d=int(d))

    def profile(self, rho):
        """Radial profile value(s) at frequency magnitude rho (real kinds only)."""
        if self.kind == "fractional":
            return _fractional_profile(rho, self.s)
        if self.kind == "bracket":
            r = np.asarray(rho, dtype=float)
            return (1.0 + r * r) ** (self.s / 2.0)
        if self.kind == "lp_low":
            return bump_profile(np.asarray(rho, dtype=float) / self.M)
        if self.kind == "lp_high":
            return 1.0 - bump_profile(np.asarray(rho, dtype=float) / self.M)
        if self.kind == "lp_band":
            r = np.asarray(rho, dtype=float)
            return bump_profile(r / self.M) - bump_profile(2.0 * r / self.M)
        if self.kind == "i_smoothing":
            return i_symbol_profile(rho, self.N, self.gamma)
        if self.kind == "morawetz_weight":
            return _fractional_profile(rho, -(self.d - 5) / 4.0)
        raise MultiplierError(f"{self.kind} has no real radial profile")

    def sample(self, grid: Grid) -> np.ndarray:
        """Symbol evaluated on the grid's frequency lattice."""
        if self.kind == "biharmonic_phase":
            return np.exp(1j * self.t * grid.rho2**2)
        if self.kind in ("lp_low", "lp_high", "lp_band"):
            if not 1.0 <= self.M <= grid.nyquist:
                raise MultiplierError(
                    f"dyadic scale {self.M} not resolvable on this grid "
                    f"(need 1 <= M <= {grid.nyquist})"
                )
        symbol = self.profile(grid.rho)
        if not np.all(np.isfinite(symbol)):
            raise MultiplierError(f"{self.kind} symbol has non-finite entries")
        return symbol


def _fractional_profile(rho, s: float):
    r = np.asarray(rho, dtype=float)
    if s == 0.0:
        return np.ones_like(r)
    if s > 0.0:
        return r**s
    # negative order: the symbol is singular at the origin, so the mean
    # (zero mode) is projected out
    out = np.zeros_like(r)
    nz = r > 0.0
    out[nz] = r[nz] ** s
    return out


@lru_cache(maxsize=16)
def _sampled_symbol(spec: MultiplierSpec, grid: Grid) -> np.ndarray:
    symbol = spec.sample(grid)
    symbol.setflags(write=False)
    return symbol


def apply_multiplier(f: Field, spec: MultiplierSpec) -> Field:
    """Apply a diagonal Fourier operator; the input field is unchanged."""
    coeffs = forward(f) * _sampled_symbol(spec, f.grid)
    return inverse(f.grid, coeffs)


def lp_project(f: Field, M: float, kind: str) -> Field:
    """Dyadic frequency projection: kind in {"low", "high", "band"}."""
    factories = {
        "low": MultiplierSpec.lp_low,
        "high": MultiplierSpec.lp_high,
        "band": MultiplierSpec.lp_band,
    }
    if kind not in factories:
        raise MultiplierError(f"projection kind must be low/high/band, got {kind!r}")
    return apply_multiplier(f, factories[kind](M))


def resolvable_dyadic_scales(grid: Grid) -> list[float]:
    """All dyadic M with 1 <= M <= the grid's per-axis frequency ceiling."""
    out = []
    m = 1.0
    while m <= grid.nyquist:
        out.append(m)
        m *= 2.0
    return out


def symbol_table(spec: MultiplierSpec, radii: np.ndarray) -> list[tuple[float, float]]:
    """(rho, value) samples of a real radial symbol, for CSV export."""
    values = spec.profile(np.asarray(radii, dtype=float))
    return [(float(r), float(v)) for r, v in zip(radii, values)]
