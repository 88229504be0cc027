r"""Closed-form fractional propagator of a traceless two-level system.

The evolution operator is the matrix Mittag-Leffler function

.. math::

    U_\alpha(t) = E_\alpha\!\left(\frac{H_0}{i^\alpha\hbar}\,t^\alpha\right)
                = \begin{pmatrix} W_+ & T_- \\ T_+ & W_- \end{pmatrix},

which for a traceless ``H0`` collapses to scalar fractional cosine and
sine evaluations at :math:`\Delta t^\alpha`.  Nothing here integrates the
Caputo equation; the closed form is the only propagation mechanism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    InternalInconsistency,
    NonConvergence,
    PhaseJumpError,
    PositivityViolation,
)
from .mittag_leffler import (
    check_alpha,
    frac_cos_sin_array,
    i_pow_neg_alpha,
    minus_one_pow_neg_alpha,
)
from .two_level import OmegaVector, delta, delta_squared

#: below this |Delta t^alpha| the removable limit S(x)/x -> 1/Gamma(alpha+1) is used
SMALL_ARGUMENT = 1e-8


@dataclass(frozen=True)
class PropagatorCoeffs:
    """Entries of ``U_alpha(t)`` plus the scalars they were built from.

    Fields are scalars or arrays sharing the shape of ``t``.
    """

    Wp: np.ndarray
    Wm: np.ndarray
    Tp: np.ndarray
    Tm: np.ndarray
    t: np.ndarray
    alpha: float
    C: np.ndarray
    S_over_delta: np.ndarray
    delta_sq: complex


@dataclass(frozen=True)
class LogDetTrack:
    """Continuously unwrapped logarithm of ``det U_alpha`` along a grid."""

    t: np.ndarray
    re_lnD: np.ndarray
    im_lnD: np.ndarray
    D: np.ndarray

    def __len__(self) -> int:
        return len(self.t)


def propagator_coeffs(alpha: float, omega: OmegaVector, t, tol: float = 1e-12) -> PropagatorCoeffs:
    """``W_+-`` and ``T_+-`` at time(s) ``t``.

    Raises :class:`~fracdyson.errors.NonConvergence` if the underlying
    Mittag-Leffler sums cannot be certified to ``tol``.
    """
    alpha = check_alpha(alpha)
    t = np.asarray(t, dtype=float)
    if np.any(t < 0) or not np.all(np.isfinite(t)):
        raise DomainError("times must be finite and non-negative")

    d = delta(omega)
    ta = t ** alpha
    x = d * ta
    try:
        c, s, _, _ = frac_cos_sin_array(alpha, x, tol)
    except NonConvergence as exc:
        # report the first time whose argument could not be certified
        hit = np.flatnonzero(np.ravel(x) == exc.z)
        t_bad = float(np.ravel(t)[hit[0]]) if hit.size else None
        raise NonConvergence(f"{exc} (t={t_bad!r})", alpha=alpha, z=exc.z, t=t_bad) from None

    small = np.abs(x) < SMALL_ARGUMENT
    with np.errstate(divide="ignore", invalid="ignore"):
        s_over_d = np.where(small, ta / math.gamma(alpha + 1.0), s / (d if d != 0 else 1.0))

    ia = i_pow_neg_alpha(alpha)
    w1, w2, w3 = omega.w1, omega.w2, omega.w3
    k3 = ia * w3 * s_over_d
    Wp = c + k3
    Wm = c - k3
    Tp = ia * (w1 + 1j * w2) * s_over_d
    Tm = ia * (w1 - 1j * w2) * s_over_d
    return PropagatorCoeffs(
        Wp=Wp, Wm=Wm, Tp=Tp, Tm=Tm, t=t, alpha=alpha,
        C=c, S_over_delta=s_over_d, delta_sq=delta_squared(omega),
    )


def propagator_matrix(coeffs: PropagatorCoeffs) -> np.ndarray:
    """Assemble ``[[W+, T-], [T+, W-]]``; shape ``t.shape + (2, 2)``."""
    top = np.stack([coeffs.Wp, coeffs.Tm], axis=-1)
    bottom = np.stack([coeffs.Tp, coeffs.Wm], axis=-1)
    return np.stack([top, bottom], axis=-2)


def det_propagator(coeffs: PropagatorCoeffs, tol: float = 1e-12) -> np.ndarray:
    """``D = W+ W- - T+ T-``, cross-checked against ``C**2 - (-1)**(-alpha) S**2``."""
    d1 = coeffs.Wp * coeffs.Wm - coeffs.Tp * coeffs.Tm
    s_sq = coeffs.delta_sq * coeffs.S_over_delta ** 2
    d2 = coeffs.C ** 2 - minus_one_pow_neg_alpha(coeffs.alpha) * s_sq
    gap = np.abs(d1 - d2)
    limit = 100.0 * max(tol, 1e-13) * np.maximum(1.0, np.abs(d1))
    if np.any(gap > limit):
        raise InternalInconsistency(
            f"determinant forms disagree by {float(np.max(gap)):.3e} (branch mishandling?)"
        )
    return d1


def unwrap_phase(D: np.ndarray, max_step: float = 0.5 * math.pi) -> np.ndarray:
    """Continuous argument of ``D`` along its first axis, anchored at ``arg D[0]``.

    Each increment is taken as the principal argument of ``D[k] / D[k-1]``.
    Raises :class:`PhaseJumpError` at the first index whose increment
    exceeds ``max_step`` in magnitude; the caller should refine the grid.
    """
    D = np.asarray(D, dtype=complex)
    if D.size == 0:
        return np.zeros(0)
    if np.any(D == 0):
        raise PositivityViolation(f"determinant vanishes at index {int(np.flatnonzero(D == 0)[0])}")
    inc = np.angle(D[1:] / D[:-1])
    over = np.flatnonzero(np.abs(inc) > max_step)
    if over.size:
        k = int(over[0]) + 1
        raise PhaseJumpError(
            f"phase increment {inc[k - 1]:.3f} rad at grid index {k} exceeds {max_step:.3f}; refine the grid",
            index=k,
        )
    phase = np.empty(D.shape)
    phase[0] = np.angle(D[0])
    np.cumsum(inc, out=phase[1:])
    phase[1:] += phase[0]
    return phase


def track_log_det(
    alpha: float,
    omega: OmegaVector,
    grid,
    tol: float = 1e-12,
    *,
    max_step: float = 0.5 * math.pi,
    coeffs: PropagatorCoeffs | None = None,
) -> LogDetTrack:
    """Real part and continuously unwrapped imaginary part of ``ln D`` on ``grid``.

    ``grid`` must start at 0 and be strictly increasing.  Pass ``coeffs``
    to reuse propagator coefficients already computed on the same grid.
    """
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise DomainError("grid must be a non-empty 1-D sequence")
    if grid[0] != 0.0:
        raise DomainError("grid must start at t = 0")
    if np.any(np.diff(grid) <= 0):
        raise DomainError("grid must be strictly increasing")
    if coeffs is None:
        coeffs = propagator_coeffs(alpha, omega, grid, tol)
    D = det_propagator(coeffs, tol)
    try:
        im = unwrap_phase(D, max_step)
    except PhaseJumpError as exc:
        raise PhaseJumpError(str(exc), index=exc.index, t=float(grid[exc.index])) from None
    return LogDetTrack(t=grid, re_lnD=np.log(np.abs(D)), im_lnD=im, D=D)
