import cmath
import math

import numpy as np
import pytest
from conftest import ALPHAS
from oracle import expm_2x2, ml_reference, propagator_reference

from fracdyson.errors import DomainError, PhaseJumpError, PositivityViolation
from fracdyson.frac_evolution import (
    det_propagator,
    propagator_coeffs,
    propagator_matrix,
    track_log_det,
    unwrap_phase,
)
from fracdyson.mittag_leffler import frac_cos_sin_array, i_pow_neg_alpha
from fracdyson.models import get_preset, pt_waveguide, yang_lee_one_site, zeeman
from fracdyson.two_level import OmegaVector, delta, hamiltonian

ZEEMAN = zeeman(1.0)  # omega = (0, 0, -1/2)


def _U(alpha, omega, t):
    return propagator_matrix(propagator_coeffs(alpha, omega, t))


def test_identity_at_zero(preset, alpha):
    c = propagator_coeffs(alpha, preset.omega, 0.0)
    assert (c.Wp, c.Wm, c.Tp, c.Tm) == (1, 1, 0, 0)


def test_alpha_one_matches_matrix_exponential(preset, grid20):
    U = _U(1.0, preset.omega, grid20)
    H = hamiltonian(preset.omega)
    ref = np.stack([expm_2x2(H, t) for t in grid20])
    assert np.max(np.abs(U - ref)) <= 1e-8


@pytest.mark.parametrize("alpha", [0.25, 0.5, 0.75])
@pytest.mark.parametrize("t", [0.3, 2.0, 7.5])
def test_fractional_matches_matrix_series(preset, alpha, t):
    ref = propagator_reference(alpha, hamiltonian(preset.omega), t)
    assert np.max(np.abs(_U(alpha, preset.omega, t) - ref)) <= 1e-10 * max(1, np.abs(ref).max())


def test_diagonal_case_is_two_scalar_functions():
    c = propagator_coeffs(0.5, ZEEMAN, 1.0)
    a = i_pow_neg_alpha(0.5) * 0.5
    assert abs(c.Wp - ml_reference(0.5, -a)) < 1e-12
    assert abs(c.Wm - ml_reference(0.5, a)) < 1e-12
    assert c.Tp == 0 and c.Tm == 0


def test_alpha_one_zeeman_is_unitary():
    U = _U(1.0, ZEEMAN, np.linspace(0, 20, 50))
    g = np.conj(np.swapaxes(U, -1, -2)) @ U - np.eye(2)
    assert np.max(np.abs(g)) < 1e-12


def test_fractional_zeeman_is_not_unitary():
    U = _U(0.5, ZEEMAN, 1.0)
    assert np.max(np.abs(U.conj().T @ U - np.eye(2))) > 1e-2


def test_semigroup_only_at_alpha_one():
    om = get_preset("pt_waveguide").omega
    s, t = 1.3, 2.1
    gap1 = np.abs(_U(1.0, om, s + t) - _U(1.0, om, s) @ _U(1.0, om, t)).max()
    gap_half = np.abs(_U(0.5, om, s + t) - _U(0.5, om, s) @ _U(0.5, om, t)).max()
    assert gap1 < 1e-12
    assert gap_half > 1e-3


@pytest.mark.parametrize("alpha", ALPHAS)
def test_delta_branch_invariance(alpha):
    om = pt_waveguide(1.0, 0.5)
    t = np.linspace(0, 15, 60)
    ta = t ** alpha
    d = delta(om)
    c1, s1, _, _ = frac_cos_sin_array(alpha, d * ta)
    c2, s2, _, _ = frac_cos_sin_array(alpha, -d * ta)
    assert np.max(np.abs(c1 - c2)) <= 1e-12 * max(1, np.abs(c1).max())
    assert np.max(np.abs(s1 / d - s2 / (-d))) <= 1e-12 * max(1, np.abs(s1).max())


def test_determinant_forms_and_product_identity(preset, alpha):
    t = np.linspace(0, 20, 81)
    c = propagator_coeffs(alpha, preset.omega, t)
    D = det_propagator(c)
    assert np.allclose(D, np.linalg.det(propagator_matrix(c)), rtol=1e-12, atol=1e-12)
    a = i_pow_neg_alpha(alpha) * delta(preset.omega) * 7.0 ** alpha
    k = 28  # t = 7
    assert abs(D[k] - ml_reference(alpha, a) * ml_reference(alpha, -a)) < 1e-10 * max(1, abs(D[k]))


def test_determinant_examples():
    assert det_propagator(propagator_coeffs(0.5, ZEEMAN, 0.0)) == 1
    D1 = det_propagator(propagator_coeffs(1.0, get_preset("zeeman").omega, np.linspace(0, 20, 33)))
    assert np.max(np.abs(np.abs(D1) - 1)) < 1e-12
    c = propagator_coeffs(0.5, ZEEMAN, 1.0)
    assert abs(det_propagator(c) - (c.Wp * c.Wm - c.Tp * c.Tm)) <= 1e-9


def test_track_single_point():
    tr = track_log_det(0.5, ZEEMAN, [0.0])
    assert len(tr) == 1 and tr.re_lnD[0] == 0 and tr.im_lnD[0] == 0


def test_track_alpha_one_is_flat():
    tr = track_log_det(1.0, ZEEMAN, np.linspace(0, 30, 301))
    assert np.max(np.abs(tr.re_lnD)) < 1e-13 and np.max(np.abs(tr.im_lnD)) < 1e-13


def test_track_dense_half_order():
    grid = np.linspace(0, 10, 2001)
    om = get_preset("zeeman").omega
    tr = track_log_det(0.5, om, grid)
    assert np.max(np.abs(np.diff(tr.im_lnD))) < 0.1
    D = det_propagator(propagator_coeffs(0.5, om, grid))
    assert np.max(np.abs(np.exp(tr.re_lnD + 1j * tr.im_lnD) - D) / np.abs(D)) <= 1e-8
    # the unwrapped phase leaves the principal interval
    assert tr.im_lnD.min() < -math.pi


def test_coarse_grid_raises_phase_jump():
    grid = np.arange(0.0, 21.0, 5.0)
    with pytest.raises(PhaseJumpError) as info:
        track_log_det(0.5, get_preset("zeeman").omega, grid)
    assert 1 <= info.value.index < len(grid)
    assert info.value.t == grid[info.value.index]


def test_unwrap_phase_rules():
    D = np.exp(1j * np.linspace(0, 12, 200))
    assert np.allclose(unwrap_phase(D), np.linspace(0, 12, 200))
    assert unwrap_phase(np.array([], dtype=complex)).size == 0
    with pytest.raises(PositivityViolation):
        unwrap_phase(np.array([1, 0, 1], dtype=complex))
    with pytest.raises(PhaseJumpError) as info:
        unwrap_phase(np.exp(1j * np.array([0.0, 0.1, 2.0])))
    assert info.value.index == 2


@pytest.mark.parametrize("grid", [[0.5, 1.0], [0.0, 1.0, 1.0], [0.0, 2.0, 1.0], [[0.0, 1.0]], []])
def test_grid_validation(grid):
    with pytest.raises(DomainError):
        track_log_det(0.5, ZEEMAN, grid)


def test_negative_time_refused():
    with pytest.raises(DomainError):
        propagator_coeffs(0.5, ZEEMAN, -1.0)


@pytest.mark.parametrize("omega", [yang_lee_one_site(1.0), pt_waveguide(0.8, 0.8), zeeman(0.0)])
@pytest.mark.parametrize("alpha", [0.5, 1.0])
def test_exceptional_point_uses_removable_limit(omega, alpha):
    t = np.array([0.0, 0.5, 3.0, 10.0])
    U = _U(alpha, omega, t)
    H = hamiltonian(omega)
    # H is nilpotent here, so the series stops after the linear term
    ref = np.eye(2) + i_pow_neg_alpha(alpha) * H * (t ** alpha / math.gamma(alpha + 1))[:, None, None]
    assert np.all(np.isfinite(U))
    assert np.max(np.abs(U - ref)) <= 1e-12 * np.abs(ref).max()


def test_near_exceptional_point_is_continuous():
    t = 2.0
    at_ep = _U(0.5, pt_waveguide(1.0, 1.0), t)
    near = _U(0.5, pt_waveguide(1.0, 1.0 - 1e-9), t)
    assert np.max(np.abs(near - at_ep)) < 1e-7


def test_general_complex_omega_against_series():
    om = OmegaVector(0.3 + 0.2j, -0.4j, 0.6)
    ref = propagator_reference(0.75, hamiltonian(om), 4.0)
    assert np.max(np.abs(_U(0.75, om, 4.0) - ref)) <= 1e-10
    assert cmath.isclose(det_propagator(propagator_coeffs(0.75, om, 4.0)), np.linalg.det(ref), rel_tol=1e-10)
