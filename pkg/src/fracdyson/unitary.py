"""Unitary propagator obtained by dressing the fractional one with the Dyson map.

``u(t) = eta(t) U(t) eta(0)^{-1}``.  The entrywise closed form is the
ground truth here; the reduced ``(varpi, tau, phase)`` form depends on the
unwrapped phase of ``det U`` and is always cross-checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dyson import DysonInit, DysonParams, zeta_xi
from .errors import InternalInconsistency, PositivityViolation
from .frac_evolution import LogDetTrack, PropagatorCoeffs

REDUCED_TOL = 1e-7


@dataclass(frozen=True)
class UnitaryCoeffs:
    """``u = e^{i phase} [[varpi, tau], [-tau*, varpi*]]``."""

    varpi: np.ndarray
    tau: np.ndarray
    global_phase: np.ndarray
    t: np.ndarray


def unitary_general(coeffs: PropagatorCoeffs, params_t: DysonParams, init: DysonInit) -> np.ndarray:
    """Entrywise ``[[varpi+, varpi-], [tau+, tau-]]`` on the grid; shape ``(..., 2, 2)``."""
    Lam = np.asarray(params_t.Lambda, dtype=float)
    if np.any(~(Lam > 0)):
        raise PositivityViolation("Lambda must be strictly positive")
    lam = np.asarray(params_t.lambda_, dtype=complex)
    zx = zeta_xi(coeffs, init)
    pref = np.exp(np.asarray(params_t.kappa) - init.kappa0) / np.sqrt(Lam * init.Lambda0)
    big = Lam + np.abs(lam) ** 2
    vp = pref * (lam * zx.zeta_p + big * zx.xi_p)
    vm = -pref * (lam * zx.zeta_m + big * zx.xi_m)
    tp = pref * (np.conj(lam) * zx.xi_p + zx.zeta_p)
    tm = -pref * (np.conj(lam) * zx.xi_m + zx.zeta_m)
    top = np.stack([vp, vm], axis=-1)
    bottom = np.stack([tp, tm], axis=-1)
    return np.stack([top, bottom], axis=-2)


def reduced_matrix(uc: UnitaryCoeffs) -> np.ndarray:
    ph = np.exp(1j * np.asarray(uc.global_phase))
    v, tau = np.asarray(uc.varpi), np.asarray(uc.tau)
    top = np.stack([v, tau], axis=-1)
    bottom = np.stack([-np.conj(tau), np.conj(v)], axis=-1)
    return ph[..., None, None] * np.stack([top, bottom], axis=-2)


def unitary_reduced(
    coeffs: PropagatorCoeffs,
    params_t: DysonParams,
    init: DysonInit,
    track: LogDetTrack,
    *,
    general: np.ndarray | None = None,
) -> UnitaryCoeffs:
    """Reduced form with global phase ``Im[ln D] / 2``.

    Raises :class:`InternalInconsistency` when the reconstructed matrix and
    the entrywise form differ by more than ``1e-7``.
    """
    if general is None:
        general = unitary_general(coeffs, params_t, init)
    half = 0.5 * np.asarray(track.im_lnD)
    rot = np.exp(-1j * half)
    uc = UnitaryCoeffs(varpi=rot * general[..., 0, 0], tau=rot * general[..., 0, 1],
                       global_phase=half, t=np.asarray(track.t))
    gap = np.max(np.abs(reduced_matrix(uc) - general), initial=0.0)
    if gap > REDUCED_TOL:
        raise InternalInconsistency(f"reduced and general unitary forms differ by {gap:.3e}")
    return uc


def evolve_state(u: np.ndarray, psi0) -> np.ndarray:
    """Apply ``u`` (one matrix or a stack) to ``psi0``; returns shape ``(..., 2)``."""
    psi0 = np.asarray(psi0, dtype=complex)
    return np.einsum("...ij,j->...i", u, psi0)


def unitarity_defect(u: np.ndarray) -> np.ndarray:
    """Infinity norm of ``u^dagger u - I`` for each matrix in the stack."""
    g = np.conj(np.swapaxes(u, -1, -2)) @ u - np.eye(2)
    return np.max(np.sum(np.abs(g), axis=-1), axis=-1)
