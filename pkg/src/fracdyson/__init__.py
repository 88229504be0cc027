"""Unitary dynamics of fractional-time two-level systems via a time-dependent Dyson map."""

__version__ = "0.1.0"

from .dyson import DysonInit, DysonParams, dyson_matrix, metric
from .errors import (
    ConfigError,
    DegenerateState,
    DomainError,
    FracDysonError,
    InternalInconsistency,
    NonConvergence,
    PhaseJumpError,
    PositivityViolation,
    UnsupportedModel,
)
from .frac_evolution import propagator_coeffs, propagator_matrix, track_log_det
from .mittag_leffler import frac_cos, frac_sin, ml, ml_array
from .models import get_preset, pt_waveguide, yang_lee_one_site, zeeman
from .trajectory import Trajectory, evolve, evolve_preset, magnetization_trajectory
from .two_level import OmegaVector, delta, hamiltonian, pauli

__all__ = [
    "ConfigError", "DegenerateState", "DomainError", "DysonInit", "DysonParams",
    "FracDysonError", "InternalInconsistency", "NonConvergence", "OmegaVector",
    "PhaseJumpError", "PositivityViolation", "Trajectory", "UnsupportedModel",
    "delta", "dyson_matrix", "evolve", "evolve_preset", "frac_cos", "frac_sin",
    "get_preset", "hamiltonian", "magnetization_trajectory", "metric", "ml", "ml_array", "pauli", "propagator_coeffs",
    "propagator_matrix", "pt_waveguide", "track_log_det", "yang_lee_one_site", "zeeman",
]
