"""Invariant checks evaluated on a computed trajectory.

Each check reports the worst violation found on the grid together with
the tolerance it is held to.  Positivity checks report the smallest value
seen instead, and pass when it is strictly positive.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import observables as obs
from .dyson import consistency_residual, metric, zeta_xi
from .mittag_leffler import minus_one_pow_neg_alpha
from .trajectory import Trajectory
from .unitary import reduced_matrix, unitarity_defect

_R = math.sqrt(0.5)
#: initial states used by the conservation checks
BASKET = (
    np.array([1, 0], dtype=complex),
    np.array([0, 1], dtype=complex),
    np.array([_R, _R], dtype=complex),
    np.array([_R, 1j * _R], dtype=complex),
)

TOLERANCES = {
    "unitarity": 1e-8,
    "reduced_vs_general": 1e-9,
    "varpi_tau_norm": 1e-9,
    "det_u_phase": 1e-9,
    "unitarity_relation": 1e-9,
    "consistency_identity": 1e-8,
    "metric_conservation": 1e-8,
    "norm_conservation": 1e-8,
    "two_path_states": 1e-9,
    "det_consistency": 1e-9,
    "hermiticity_eta": 1e-12,
    "hermiticity_theta": 1e-12,
    "bloch_norm": 1e-9,
    "intensity_conservation": 1e-9,
    "closed_form_magnetization": 1e-9,
    "closed_form_population": 1e-9,
    "closed_form_intensities": 1e-9,
}


@dataclass(frozen=True)
class Check:
    name: str
    value: float
    tolerance: float | None
    passed: bool
    kind: str = "max_violation"

    def as_dict(self) -> dict:
        return asdict(self)


def _max(a) -> float:
    return float(np.max(np.abs(a), initial=0.0))


def _dagger(m):
    return np.conj(np.swapaxes(m, -1, -2))


def measure(traj: Trajectory) -> dict[str, float]:
    """Raw worst-case violations (and positivity minima) along ``traj``."""
    u, U = traj.u, traj.U
    phase = traj.track.im_lnD
    red = traj.reduced
    out: dict[str, float] = {}

    out["unitarity"] = float(np.max(unitarity_defect(u), initial=0.0))
    out["reduced_vs_general"] = _max(reduced_matrix(red) - u)
    out["varpi_tau_norm"] = _max(np.abs(red.varpi) ** 2 + np.abs(red.tau) ** 2 - 1)
    out["det_u_phase"] = _max(np.linalg.det(u) - np.exp(1j * phase))
    eiph = np.exp(1j * phase)
    out["unitarity_relation"] = max(
        _max(u[:, 1, 0] + eiph * np.conj(u[:, 0, 1])),
        _max(u[:, 1, 1] - eiph * np.conj(u[:, 0, 0])),
    )
    out["consistency_identity"] = _max(consistency_residual(zeta_xi(traj.coeffs, traj.init), traj.init, traj.track))

    theta, eta, e0inv = traj.theta, traj.eta, traj.eta0_inv
    theta0 = metric(traj.init.params())
    metric_gap = norm_gap = path_gap = 0.0
    for psi0 in BASKET:
        Psi = np.einsum("nij,j->ni", U, psi0)
        q = np.einsum("ni,nij,nj->n", np.conj(Psi), theta, Psi).real
        q0 = float(np.real(np.conj(psi0) @ theta0 @ psi0))
        metric_gap = max(metric_gap, _max(q / q0 - 1))
        psi = traj.states(psi0)
        norm_gap = max(norm_gap, _max(np.sum(np.abs(psi) ** 2, axis=-1) - 1))
        long_way = np.einsum("nij,njk,kl,l->ni", eta, U, e0inv, psi0)
        path_gap = max(path_gap, _max(psi - long_way))
    out["metric_conservation"] = metric_gap
    out["norm_conservation"] = norm_gap
    out["two_path_states"] = path_gap

    c = traj.coeffs
    d2 = c.C ** 2 - minus_one_pow_neg_alpha(c.alpha) * c.delta_sq * c.S_over_delta ** 2
    out["det_consistency"] = _max(traj.track.D - d2)
    out["hermiticity_eta"] = _max(eta - _dagger(eta))
    out["hermiticity_theta"] = _max(theta - _dagger(theta))
    out["lambda_min"] = float(np.min(traj.params.Lambda))
    out["metric_min_eigenvalue"] = float(np.min(np.linalg.eigvalsh(theta)[:, 0]))

    up = traj.states(BASKET[0])
    m_generic = np.stack(obs.magnetization(up), axis=-1)
    out["closed_form_magnetization"] = _max(m_generic - traj.magnetization())
    bloch = 0.0
    for psi0 in BASKET:
        m = np.stack(obs.magnetization(traj.states(psi0)), axis=-1)
        bloch = max(bloch, _max(np.sum(m ** 2, axis=-1) - 1))
    out["bloch_norm"] = bloch
    down = traj.states(BASKET[1])
    out["closed_form_population"] = _max(obs.population_difference(down) - traj.population())
    sym = traj.states(BASKET[2])
    i_generic = np.stack(obs.waveguide_intensities(sym), axis=-1)
    out["closed_form_intensities"] = _max(i_generic - traj.intensities())
    out["intensity_conservation"] = _max(np.sum(traj.intensities(), axis=-1) - 1)
    return out


def check(traj: Trajectory) -> list[Check]:
    """Evaluate every invariant on ``traj`` against :data:`TOLERANCES`."""
    raw = measure(traj)
    checks = []
    for name, tol in TOLERANCES.items():
        v = raw[name]
        checks.append(Check(name, v, tol, bool(v <= tol)))
    for name in ("lambda_min", "metric_min_eigenvalue"):
        v = raw[name]
        checks.append(Check(name, v, None, bool(v > 0), kind="min_positive"))
    return checks
