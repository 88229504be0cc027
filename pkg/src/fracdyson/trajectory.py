"""End-to-end evaluation along a time grid.

:func:`evolve` runs the whole chain once per grid: propagator coefficients,
phase-tracked ``ln det U``, Dyson parameters, and the unitary propagator in
both forms.  Everything downstream (observables, the CLI, the audit) reads
from the resulting :class:`Trajectory`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import observables as obs
from .dyson import (
    DysonInit,
    DysonParams,
    check_initial_consistency,
    dyson_inverse,
    dyson_matrix,
    dyson_params,
    metric,
)
from .frac_evolution import (
    LogDetTrack,
    PropagatorCoeffs,
    propagator_coeffs,
    propagator_matrix,
    track_log_det,
)
from .mittag_leffler import check_alpha
from .models import Preset
from .two_level import OmegaVector
from .unitary import UnitaryCoeffs, evolve_state, unitary_general, unitary_reduced


@dataclass(frozen=True)
class Trajectory:
    alpha: float
    omega: OmegaVector
    init: DysonInit
    coeffs: PropagatorCoeffs
    track: LogDetTrack
    params: DysonParams
    u: np.ndarray
    reduced: UnitaryCoeffs

    @property
    def t(self) -> np.ndarray:
        return self.track.t

    @cached_property
    def U(self) -> np.ndarray:
        """Raw (non-unitary) fractional propagator, shape ``(n, 2, 2)``."""
        return propagator_matrix(self.coeffs)

    @cached_property
    def eta(self) -> np.ndarray:
        return dyson_matrix(self.params)

    @cached_property
    def theta(self) -> np.ndarray:
        return metric(self.params)

    @cached_property
    def eta0_inv(self) -> np.ndarray:
        return dyson_inverse(self.init.params())

    def states(self, psi0) -> np.ndarray:
        """Hermitian-frame states ``u(t) psi0``."""
        return evolve_state(self.u, psi0)

    def magnetization(self) -> np.ndarray:
        """Closed-form Bloch vector for a spin-up start, shape ``(n, 3)``."""
        return np.stack(obs.magnetization_from_coeffs(self.reduced.varpi, self.reduced.tau), axis=-1)

    def population(self) -> np.ndarray:
        """Closed-form ``<sigma_3>`` for a spin-down start."""
        return obs.population_from_coeffs(self.reduced.varpi, self.reduced.tau)

    def intensities(self) -> np.ndarray:
        """Closed-form guide intensities for the ``(1, 1)/sqrt(2)`` start, shape ``(n, 2)``."""
        return np.stack(obs.intensities_from_coeffs(self.reduced.varpi, self.reduced.tau), axis=-1)


def evolve(
    alpha: float,
    omega: OmegaVector,
    grid,
    init: DysonInit | None = None,
    tol: float = 1e-12,
    *,
    max_step: float = 0.5 * math.pi,
) -> Trajectory:
    """Compute every stage on ``grid`` (which must start at 0 and increase strictly)."""
    alpha = check_alpha(alpha)
    init = init if init is not None else DysonInit()
    check_initial_consistency(init)
    grid = np.asarray(grid, dtype=float)
    coeffs = propagator_coeffs(alpha, omega, grid, tol)
    track = track_log_det(alpha, omega, grid, tol, max_step=max_step, coeffs=coeffs)
    params = dyson_params(coeffs, init, track)
    u = unitary_general(coeffs, params, init)
    reduced = unitary_reduced(coeffs, params, init, track, general=u)
    return Trajectory(alpha, omega, init, coeffs, track, params, u, reduced)


def evolve_preset(alpha: float, preset: Preset, grid, tol: float = 1e-12, **kwargs) -> Trajectory:
    return evolve(alpha, preset.omega, grid, preset.dyson_init, tol, **kwargs)


def magnetization_trajectory(alpha: float, preset: Preset, init: DysonInit | None, grid,
                             tol: float = 1e-12) -> np.ndarray:
    """Closed-form magnetisation ``(M1, M2, M3)`` for a spin-up start, shape ``(n, 3)``."""
    init = init if init is not None else preset.dyson_init
    return evolve(alpha, preset.omega, grid, init, tol).magnetization()
