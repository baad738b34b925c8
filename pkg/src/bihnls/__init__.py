"""Pseudospectral toolkit for the defocusing fourth-order NLS.

Modules: ``spectral`` (grids, transforms, Fourier multipliers), ``dynamics``
(splitting integrator, scaling transform), ``exponents`` (threshold and
admissibility calculus), ``diagnostics`` (field/trajectory functionals),
``experiments`` (recipes + persistence), ``cli`` (entry point).
"""

__version__ = "0.1.0"

from .spectral import Field, Grid, MultiplierSpec, apply_multiplier, make_grid
from .dynamics import SolverConfig, Trajectory, evolve, free_propagate, rescale, strang_step
from .exponents import ExponentReport, build_report, critical_exponent, gamma_threshold

__all__ = [
    "Field",
    "Grid",
    "MultiplierSpec",
    "apply_multiplier",
    "make_grid",
    "SolverConfig",
    "Trajectory",
    "evolve",
    "free_propagate",
    "rescale",
    "strang_step",
    "ExponentReport",
    "build_report",
    "critical_exponent",
    "gamma_threshold",
    "__version__",
]
