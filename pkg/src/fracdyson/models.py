"""Preset Hamiltonians: Zeeman spin, one-site Yang-Lee chain, PT-symmetric waveguide pair."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .dyson import DysonInit
from .errors import ConfigError, UnsupportedModel
from .two_level import OmegaVector


def zeeman(omega_L: float) -> OmegaVector:
    """Spin-1/2 in a longitudinal field: ``w = (0, 0, -omega_L/2)``."""
    return OmegaVector(0, 0, -0.5 * float(omega_L))


def yang_lee_one_site(xi: float, *, n_sites: int = 1, J: float = 0.0) -> OmegaVector:
    """Single site of the Yang-Lee chain: ``w = (-i xi/2, 0, -1/2)``.

    Only ``n_sites == 1`` with ``J == 0`` reduces to a two-level problem.
    """
    if n_sites != 1 or J != 0:
        raise UnsupportedModel("only the one-site Yang-Lee chain with J = 0 is supported")
    return OmegaVector(-0.5j * float(xi), 0, -0.5)


def pt_waveguide(sigma: float, eps: float) -> OmegaVector:
    """Two coupled waveguides with balanced gain/loss: ``w = (sigma, 0, -i eps)``."""
    return OmegaVector(float(sigma), 0, -1j * float(eps))


@dataclass(frozen=True)
class Preset:
    name: str
    parameters: dict
    omega: OmegaVector
    initial_state: np.ndarray
    dyson_init: DysonInit = field(default_factory=DysonInit)


_BUILDERS = {
    "zeeman": (zeeman, {"omega_L": 2.0}, (1.0, 0.0)),
    "yang_lee_one_site": (yang_lee_one_site, {"xi": 0.5}, (0.0, 1.0)),
    "pt_waveguide": (pt_waveguide, {"sigma": 1.0, "eps": 0.5}, (math.sqrt(0.5), math.sqrt(0.5))),
}

PRESET_NAMES = tuple(_BUILDERS)


def preset_defaults(name: str) -> dict:
    try:
        return dict(_BUILDERS[name][1])
    except KeyError:
        raise ConfigError(f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}") from None


def get_preset(name: str, dyson_init: DysonInit | None = None, **parameters) -> Preset:
    """Build a named preset; unspecified parameters take the defaults below.

    Defaults: ``zeeman`` uses ``omega_L = 2`` (so ``Delta = 1``),
    ``yang_lee_one_site`` uses ``xi = 1/2``, ``pt_waveguide`` uses
    ``sigma = 1, eps = 1/2``.  The Dyson map starts from ``kappa0 = 0``,
    ``lambda0 = 3/2`` (real), ``Lambda0 = 2``.
    """
    params = preset_defaults(name)
    builder, _, psi0 = _BUILDERS[name]
    unknown = set(parameters) - set(params)
    if unknown:
        raise ConfigError(f"preset {name!r} has no parameter(s) {sorted(unknown)}")
    params.update({k: float(v) for k, v in parameters.items()})
    return Preset(
        name=name,
        parameters=params,
        omega=builder(**params),
        initial_state=np.array(psi0, dtype=complex),
        dyson_init=dyson_init if dyson_init is not None else DysonInit(),
    )
