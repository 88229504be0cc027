"""Physical read-outs in the Hermitian frame.

Generic expectation values act on state arrays of shape ``(..., 2)``; the
``*_from_coeffs`` variants are the closed forms in terms of
``(varpi, tau)`` for the specific initial states each model starts from.
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateState


def _norm2(psi: np.ndarray) -> np.ndarray:
    n2 = np.sum(np.abs(psi) ** 2, axis=-1)
    if np.any(n2 == 0):
        raise DegenerateState("state vector has zero norm")
    return n2


def magnetization(psi) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Normalised Bloch components ``<sigma_k>``, k = 1..3."""
    psi = np.asarray(psi, dtype=complex)
    n2 = _norm2(psi)
    up, down = psi[..., 0], psi[..., 1]
    cross = np.conj(up) * down
    return 2 * cross.real / n2, 2 * cross.imag / n2, (np.abs(up) ** 2 - np.abs(down) ** 2) / n2


def population_difference(psi) -> np.ndarray:
    """``<sigma_3>`` normalised by the state norm."""
    return magnetization(psi)[2]


def waveguide_intensities(psi) -> tuple[np.ndarray, np.ndarray]:
    """Field intensities in the two guides, ``|E+|^2`` and ``|E-|^2``.

    These are the squared components of ``psi`` and add up to ``|psi|^2``.
    """
    psi = np.asarray(psi, dtype=complex)
    _norm2(psi)
    return np.abs(psi[..., 0]) ** 2, np.abs(psi[..., 1]) ** 2


def mode_intensities(psi) -> tuple[np.ndarray, np.ndarray]:
    """Weights on the symmetric/antisymmetric supermodes ``(1, +-1)/sqrt(2)``."""
    psi = np.asarray(psi, dtype=complex)
    _norm2(psi)
    a, b = psi[..., 0], psi[..., 1]
    return 0.5 * np.abs(a + b) ** 2, 0.5 * np.abs(a - b) ** 2


def magnetization_from_coeffs(varpi, tau):
    """Closed form for a spin-up start."""
    p = np.asarray(varpi) * np.asarray(tau)
    return -2 * p.real, 2 * p.imag, np.abs(varpi) ** 2 - np.abs(tau) ** 2


def population_from_coeffs(varpi, tau):
    """Closed form for a spin-down start."""
    return np.abs(tau) ** 2 - np.abs(varpi) ** 2


def intensities_from_coeffs(varpi, tau):
    """Closed form for the ``(1, 1)/sqrt(2)`` start."""
    varpi, tau = np.asarray(varpi), np.asarray(tau)
    return 0.5 * np.abs(varpi + tau) ** 2, 0.5 * np.abs(varpi - tau) ** 2
