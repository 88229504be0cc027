r"""Time-dependent Dyson map that makes the fractional evolution unitary.

The map is taken in the Hermitian, positive-definite form

.. math::

    \eta(t) = \frac{e^{\kappa}}{\sqrt{\Lambda}}
              \begin{pmatrix} \Lambda + |\lambda|^2 & \lambda \\
                              \lambda^* & 1 \end{pmatrix},
    \qquad \Lambda > 0,

and its parameters are evaluated pointwise from closed forms that only
involve the propagator entries, the initial parameters and ``ln det U``.
No differential equation is integrated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InternalInconsistency, PositivityViolation
from .frac_evolution import LogDetTrack, PropagatorCoeffs


@dataclass(frozen=True)
class DysonInit:
    """Dyson-map parameters at ``t = 0``."""

    kappa0: float = 0.0
    lambda0: complex = 1.5 + 0j
    Lambda0: float = 2.0

    def __post_init__(self):
        object.__setattr__(self, "kappa0", float(self.kappa0))
        object.__setattr__(self, "lambda0", complex(self.lambda0))
        object.__setattr__(self, "Lambda0", float(self.Lambda0))
        if not self.Lambda0 > 0:
            raise DomainError(f"Lambda0 must be positive, got {self.Lambda0!r}")
        if not (math.isfinite(self.kappa0) and math.isfinite(abs(self.lambda0))
                and math.isfinite(self.Lambda0)):
            raise DomainError("Dyson initial parameters must be finite")

    @classmethod
    def from_polar(cls, kappa0: float = 0.0, lambda0_abs: float = 1.5,
                   lambda0_phase: float = 0.0, Lambda0: float = 2.0) -> "DysonInit":
        return cls(kappa0, lambda0_abs * complex(math.cos(lambda0_phase), math.sin(lambda0_phase)), Lambda0)

    def params(self) -> "DysonParams":
        return DysonParams(self.kappa0, self.lambda0, self.Lambda0, 0.0)


@dataclass(frozen=True)
class DysonParams:
    """``kappa``, ``lambda`` and ``Lambda`` at time(s) ``t`` (scalars or arrays)."""

    kappa: np.ndarray
    lambda_: np.ndarray
    Lambda: np.ndarray
    t: np.ndarray


@dataclass(frozen=True)
class ZetaXi:
    zeta_p: np.ndarray
    zeta_m: np.ndarray
    xi_p: np.ndarray
    xi_m: np.ndarray


def zeta_xi(coeffs: PropagatorCoeffs, init: DysonInit) -> ZetaXi:
    """Combinations of propagator entries with the initial Dyson parameters."""
    l0 = init.lambda0
    big = init.Lambda0 + abs(l0) ** 2
    return ZetaXi(
        zeta_p=coeffs.Tp - l0.conjugate() * coeffs.Wm,
        zeta_m=l0 * coeffs.Tp - big * coeffs.Wm,
        xi_p=coeffs.Wp - l0.conjugate() * coeffs.Tm,
        xi_m=l0 * coeffs.Wp - big * coeffs.Tm,
    )


def kappa(init: DysonInit, track: LogDetTrack) -> np.ndarray:
    """``kappa(t) = kappa0 - Re[ln D(t)] / 2``; fixes ``|det u| = 1``."""
    return init.kappa0 - 0.5 * np.asarray(track.re_lnD)


def lambda_Lambda(zx: ZetaXi, init: DysonInit, track: LogDetTrack) -> tuple[np.ndarray, np.ndarray]:
    """Closed forms for ``lambda(t)`` and ``Lambda(t)``.

    Raises :class:`PositivityViolation` if ``Lambda`` is not strictly
    positive at some point.
    """
    w = init.Lambda0 * np.exp(track.re_lnD)
    zp, zm, xp, xm = zx.zeta_p, zx.zeta_m, zx.xi_p, zx.xi_m
    den = np.abs(xp) ** 2 + np.abs(xm) ** 2 + w
    lam = -(xp * np.conj(zp) + xm * np.conj(zm)) / den
    Lam = (np.abs(zp) ** 2 + np.abs(zm) ** 2 + w) / den - np.abs(lam) ** 2
    if np.any(~(Lam > 0)):
        raise PositivityViolation(f"Lambda(t) lost positivity: min {float(np.min(Lam)):.3e}")
    return lam, Lam


def consistency_residual(zx: ZetaXi, init: DysonInit, track: LogDetTrack) -> np.ndarray:
    """Relative residual of ``(zeta+ xi- - zeta- xi+) e^{-i Im lnD} = Lambda0 e^{Re lnD}``."""
    rhs = init.Lambda0 * np.exp(track.re_lnD)
    lhs = (zx.zeta_p * zx.xi_m - zx.zeta_m * zx.xi_p) * np.exp(-1j * track.im_lnD)
    return np.abs(lhs - rhs) / rhs


def dyson_params(coeffs: PropagatorCoeffs, init: DysonInit, track: LogDetTrack) -> DysonParams:
    """All three Dyson-map parameters on the grid of ``track``."""
    zx = zeta_xi(coeffs, init)
    lam, Lam = lambda_Lambda(zx, init, track)
    return DysonParams(kappa(init, track), lam, Lam, np.asarray(track.t))


def check_initial_consistency(init: DysonInit, tol: float = 1e-12) -> None:
    """Feed the ``t = 0`` propagator through the closed forms and demand ``(lambda0, Lambda0)`` back."""
    one = np.ones(1, dtype=complex)
    zero = np.zeros(1, dtype=complex)
    coeffs0 = PropagatorCoeffs(Wp=one, Wm=one, Tp=zero, Tm=zero, t=np.zeros(1), alpha=1.0,
                               C=one, S_over_delta=zero, delta_sq=0j)
    track0 = LogDetTrack(t=np.zeros(1), re_lnD=np.zeros(1), im_lnD=np.zeros(1), D=one)
    lam, Lam = lambda_Lambda(zeta_xi(coeffs0, init), init, track0)
    scale = max(1.0, abs(init.lambda0), init.Lambda0)
    err = max(abs(lam[0] - init.lambda0), abs(Lam[0] - init.Lambda0))
    if err > tol * scale:
        raise InternalInconsistency(f"Dyson closed forms do not reproduce their initial values (err {err:.3e})")


def _check_positive(params: DysonParams) -> None:
    if np.any(~(np.asarray(params.Lambda) > 0)):
        raise PositivityViolation("Lambda must be strictly positive")


def dyson_matrix(params: DysonParams) -> np.ndarray:
    """The Hermitian 2x2 Dyson map; shape ``t.shape + (2, 2)``."""
    _check_positive(params)
    lam = np.asarray(params.lambda_, dtype=complex)
    Lam = np.asarray(params.Lambda, dtype=float)
    pref = np.exp(params.kappa) / np.sqrt(Lam)
    top = np.stack([Lam + np.abs(lam) ** 2 + 0j, lam], axis=-1)
    bottom = np.stack([np.conj(lam), np.ones_like(lam)], axis=-1)
    eta = np.asarray(pref)[..., None, None] * np.stack([top, bottom], axis=-2)
    return eta


def dyson_inverse(params: DysonParams) -> np.ndarray:
    """Analytic inverse of :func:`dyson_matrix` (its determinant is ``e^{2 kappa}``)."""
    _check_positive(params)
    lam = np.asarray(params.lambda_, dtype=complex)
    Lam = np.asarray(params.Lambda, dtype=float)
    pref = np.exp(-np.asarray(params.kappa)) / np.sqrt(Lam)
    top = np.stack([np.ones_like(lam), -lam], axis=-1)
    bottom = np.stack([-np.conj(lam), Lam + np.abs(lam) ** 2 + 0j], axis=-1)
    return np.asarray(pref)[..., None, None] * np.stack([top, bottom], axis=-2)


def metric(params: DysonParams) -> np.ndarray:
    """``Theta = eta^dagger eta``, checked to be positive definite."""
    eta = dyson_matrix(params)
    theta = np.conj(np.swapaxes(eta, -1, -2)) @ eta
    # eigvalsh reads one triangle only, so rounding asymmetry cannot leak in
    if np.any(np.linalg.eigvalsh(theta)[..., 0] <= 0):
        raise PositivityViolation("metric operator is not positive definite")
    return theta
