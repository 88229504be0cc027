import numpy as np
import pytest
from conftest import BASKET
from oracle import eta_matrix, hermitian_frame_reference

from fracdyson.dyson import DysonInit
from fracdyson.models import get_preset
from fracdyson.trajectory import evolve, evolve_preset
from fracdyson.two_level import hamiltonian
from fracdyson.unitary import evolve_state, reduced_matrix, unitarity_defect


def test_identity_at_zero(preset, alpha):
    tr = evolve_preset(alpha, preset, [0.0])
    assert np.allclose(tr.u[0], np.eye(2), atol=1e-14)
    assert abs(tr.reduced.varpi[0] - 1) < 1e-14 and abs(tr.reduced.tau[0]) < 1e-14
    assert tr.reduced.global_phase[0] == 0


def test_unitary_on_grid(preset, alpha, grid20):
    tr = evolve_preset(alpha, preset, grid20)
    assert np.max(unitarity_defect(tr.u)) <= 1e-9
    assert np.max(np.abs(reduced_matrix(tr.reduced) - tr.u)) <= 1e-9
    assert np.max(np.abs(np.abs(tr.reduced.varpi) ** 2 + np.abs(tr.reduced.tau) ** 2 - 1)) <= 1e-9
    assert np.allclose(np.linalg.det(tr.u), np.exp(1j * tr.track.im_lnD), atol=1e-9)


def test_alpha_one_zeeman_at_three():
    tr = evolve_preset(1.0, get_preset("zeeman"), np.linspace(0, 3, 31))
    assert unitarity_defect(tr.u[-1]) <= 1e-9


def test_yang_lee_half_order_at_two():
    tr = evolve_preset(0.5, get_preset("yang_lee_one_site"), np.linspace(0, 2, 41))
    assert unitarity_defect(tr.u[-1]) <= 1e-8
    assert unitarity_defect(tr.U[-1]) > 1e-2


@pytest.mark.parametrize("alpha", [0.25, 0.75])
def test_matches_hermitian_frame_oracle(preset, alpha):
    init = preset.dyson_init
    tr = evolve_preset(alpha, preset, np.linspace(0, 9, 181))
    eta0 = eta_matrix(init.kappa0, init.lambda0, init.Lambda0)
    ref = hermitian_frame_reference(alpha, hamiltonian(preset.omega), 9.0, eta0)
    assert np.max(np.abs(tr.u[-1] - ref)) <= 1e-9


def test_alpha_one_hermitian_model_is_unchanged_when_map_is_static():
    # a Hermitian H commuting with the initial map leaves u = U
    tr = evolve(1.0, get_preset("zeeman").omega, np.linspace(0, 10, 101), DysonInit(0, 0, 3))
    assert np.max(np.abs(tr.u - tr.U)) < 1e-12


def test_evolve_state():
    assert np.array_equal(evolve_state(np.eye(2), [0.6, 0.8j]), [0.6, 0.8j])
    u = np.stack([np.eye(2), [[0, 1], [1, 0]]])
    assert np.array_equal(evolve_state(u, [1, 0]), [[1, 0], [0, 1]])


def test_norm_conserved_for_basket(preset, alpha, grid20):
    tr = evolve_preset(alpha, preset, grid20)
    for psi0 in BASKET:
        n = np.sum(np.abs(tr.states(psi0)) ** 2, axis=-1)
        assert np.max(np.abs(n - 1)) <= 1e-9
