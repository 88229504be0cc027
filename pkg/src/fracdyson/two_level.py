"""Traceless two-level Hamiltonians written in the Pauli basis.

Matrices are plain ``(2, 2)`` complex numpy arrays; stacks of matrices
along a time grid have shape ``(n, 2, 2)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

_PAULI = {
    1: np.array([[0, 1], [1, 0]], dtype=complex),
    2: np.array([[0, -1j], [1j, 0]], dtype=complex),
    3: np.array([[1, 0], [0, -1]], dtype=complex),
}


def pauli(k: int) -> np.ndarray:
    """Return a fresh copy of the Pauli matrix ``sigma_k`` for k in 1..3."""
    if k not in _PAULI:
        raise DomainError(f"Pauli index must be 1, 2 or 3, got {k!r}")
    return _PAULI[k].copy()


def ladder() -> tuple[np.ndarray, np.ndarray]:
    """Raising and lowering operators ``(sigma_1 +/- i sigma_2) / 2``."""
    sp = 0.5 * (_PAULI[1] + 1j * _PAULI[2])
    sm = 0.5 * (_PAULI[1] - 1j * _PAULI[2])
    return sp, sm


@dataclass(frozen=True)
class OmegaVector:
    """Complex coefficient vector of ``H = hbar * (w1 s1 + w2 s2 + w3 s3)``."""

    w1: complex = 0j
    w2: complex = 0j
    w3: complex = 0j

    def __post_init__(self):
        for name in ("w1", "w2", "w3"):
            v = complex(getattr(self, name))
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise DomainError(f"{name} must be finite, got {v!r}")
            object.__setattr__(self, name, v)

    def as_array(self) -> np.ndarray:
        return np.array([self.w1, self.w2, self.w3], dtype=complex)

    @property
    def is_hermitian(self) -> bool:
        return self.w1.imag == 0 and self.w2.imag == 0 and self.w3.imag == 0


def hamiltonian(omega: OmegaVector, hbar: float = 1.0) -> np.ndarray:
    """``hbar * sigma . omega`` as a 2x2 matrix (trace exactly zero)."""
    if not hbar > 0:
        raise DomainError(f"hbar must be positive, got {hbar!r}")
    w1, w2, w3 = omega.w1, omega.w2, omega.w3
    return hbar * np.array([[w3, w1 - 1j * w2], [w1 + 1j * w2, -w3]], dtype=complex)


def delta_squared(omega: OmegaVector) -> complex:
    return omega.w1 ** 2 + omega.w2 ** 2 + omega.w3 ** 2


def delta(omega: OmegaVector) -> complex:
    """Principal square root of ``w1**2 + w2**2 + w3**2``.

    Zero is allowed; the propagator treats it through the removable limit.
    """
    return cmath.sqrt(delta_squared(omega))
