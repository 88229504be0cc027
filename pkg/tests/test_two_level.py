import cmath
import math

import numpy as np
import pytest

from fracdyson.errors import DomainError
from fracdyson.two_level import OmegaVector, delta, delta_squared, hamiltonian, ladder, pauli

I2 = np.eye(2)


def test_pauli_conventions():
    assert np.array_equal(pauli(3), np.diag([1, -1]))
    for k in (1, 2, 3):
        assert np.allclose(pauli(k) @ pauli(k), I2)
        assert np.allclose(pauli(k), pauli(k).conj().T)
    assert np.allclose(pauli(1) @ pauli(2), 1j * pauli(3))
    assert np.allclose(pauli(2) @ pauli(3), 1j * pauli(1))


def test_pauli_returns_copy():
    p = pauli(1)
    p[0, 0] = 7
    assert pauli(1)[0, 0] == 0


@pytest.mark.parametrize("k", [0, 4, -1, "1"])
def test_pauli_bad_index(k):
    with pytest.raises(DomainError):
        pauli(k)


def test_ladder():
    sp, sm = ladder()
    assert np.array_equal(sp, [[0, 1], [0, 0]])
    assert np.array_equal(sm, [[0, 0], [1, 0]])
    assert np.allclose(sp @ sm - sm @ sp, pauli(3))


def test_hamiltonian_examples():
    wl = 1.7
    assert np.allclose(hamiltonian(OmegaVector(0, 0, -wl / 2)), np.diag([-wl / 2, wl / 2]))
    assert np.array_equal(hamiltonian(OmegaVector()), np.zeros((2, 2)))
    s, e = 1.0, 0.5
    assert np.allclose(hamiltonian(OmegaVector(s, 0, -1j * e)), [[-1j * e, s], [s, 1j * e]])


def test_hamiltonian_matches_pauli_sum():
    w = OmegaVector(0.3 - 0.1j, -1.2, 0.7j)
    ref = sum(c * pauli(k) for k, c in zip((1, 2, 3), w.as_array()))
    assert np.allclose(hamiltonian(w, hbar=2.0), 2.0 * ref)
    assert hamiltonian(w).trace() == 0


def test_hermiticity_flag():
    assert OmegaVector(1, 2, 3).is_hermitian
    h = hamiltonian(OmegaVector(1, 2, 3))
    assert np.allclose(h, h.conj().T)
    assert not OmegaVector(1, 0, -0.5j).is_hermitian


def test_bad_inputs():
    with pytest.raises(DomainError):
        OmegaVector(float("nan"), 0, 0)
    with pytest.raises(DomainError):
        OmegaVector(0, complex(0, math.inf), 0)
    with pytest.raises(DomainError):
        hamiltonian(OmegaVector(1, 0, 0), hbar=0)


@pytest.mark.parametrize(
    "omega, expected",
    [
        (OmegaVector(0, 0, -0.5), 0.5),
        (OmegaVector(-0.25j, 0, -0.5), math.sqrt(3) / 4),
        (OmegaVector(1, 0, -0.5j), math.sqrt(3) / 2),
        (OmegaVector(-0.5j, 0, -0.5), 0.0),
    ],
)
def test_delta_examples(omega, expected):
    assert abs(delta(omega) - expected) < 1e-15


def test_delta_is_principal_root():
    w = OmegaVector(2j, 0, 0.5)  # Delta^2 = -3.75
    assert delta_squared(w) == -3.75
    assert delta(w) == cmath.sqrt(-3.75)
    assert delta(w).imag > 0
