"""Command-line front end.

::

    fracdyson run SCENARIO.toml --out DIR
    fracdyson audit SCENARIO.toml
    fracdyson presets list

A scenario is a flat TOML file::

    preset = "zeeman"          # zeeman | yang_lee_one_site | pt_waveguide
    omega_L = 2.0              # preset parameters as top-level keys
    alphas = [1.0, 0.75, 0.5, 0.25]
    t_max = 10.0
    n_points = 1000
    tol = 1e-12                # optional
    outputs = ["dyson_params", "magnetization"]
    kappa0 = 0.0               # optional Dyson initial values
    lambda0_abs = 1.5
    lambda0_phase = 0.0
    Lambda0 = 2.0

Exit codes: 0 success, 1 audit found a failing invariant, 2 configuration
error, 3 numerical failure.  Failures print one ``key=value`` line on
stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from . import __version__
from . import audit as _audit
from . import observables as obs
from .dyson import DysonInit
from .errors import (
    ConfigError,
    DomainError,
    FracDysonError,
    NonConvergence,
    PhaseJumpError,
)
from .mittag_leffler import check_alpha
from .models import PRESET_NAMES, Preset, get_preset, preset_defaults
from .trajectory import Trajectory, evolve_preset

OUTPUTS = ("dyson_params", "magnetization", "population", "intensities", "invariant_report")

COLUMNS = {
    "dyson_params": ("t", "kappa", "re_lambda", "im_lambda", "abs_lambda", "Lambda"),
    "magnetization": ("t", "M1", "M2", "M3"),
    "population": ("t", "pop_diff"),
    "intensities": ("x3", "I_plus", "I_minus"),
    "invariant_report": ("invariant", "kind", "value", "tolerance", "passed"),
}

_DYSON_KEYS = ("kappa0", "lambda0_abs", "lambda0_phase", "Lambda0")
_SCENARIO_KEYS = {"preset", "alphas", "t_max", "n_points", "tol", "outputs", "max_phase_step", *_DYSON_KEYS}


@dataclass(frozen=True)
class Scenario:
    preset: Preset
    alphas: tuple[float, ...]
    t_max: float
    n_points: int
    tol: float = 1e-12
    outputs: tuple[str, ...] = ("dyson_params",)
    max_phase_step: float = 0.5 * np.pi
    source: str = field(default="<memory>", compare=False)

    @property
    def grid(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.n_points)


def _number(cfg: dict, key: str, default=None, kind=float):
    if key not in cfg:
        if default is None:
            raise ConfigError(f"missing required key {key!r}")
        return default
    v = cfg[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(f"{key!r} must be a number, got {v!r}")
    if kind is int and (not isinstance(v, int)):
        raise ConfigError(f"{key!r} must be an integer, got {v!r}")
    return kind(v)


def parse_scenario(cfg: dict, source: str = "<memory>") -> Scenario:
    """Validate a scenario mapping (as read from TOML)."""
    name = cfg.get("preset")
    if not isinstance(name, str) or name not in PRESET_NAMES:
        raise ConfigError(f"'preset' must be one of {', '.join(PRESET_NAMES)}, got {name!r}")
    param_keys = set(preset_defaults(name))
    unknown = set(cfg) - _SCENARIO_KEYS - param_keys
    if unknown:
        raise ConfigError(f"unknown key(s) {sorted(unknown)} for preset {name!r}")
    params = {k: _number(cfg, k) for k in param_keys if k in cfg}

    try:
        init = DysonInit.from_polar(
            kappa0=_number(cfg, "kappa0", 0.0),
            lambda0_abs=_number(cfg, "lambda0_abs", 1.5),
            lambda0_phase=_number(cfg, "lambda0_phase", 0.0),
            Lambda0=_number(cfg, "Lambda0", 2.0),
        )
        preset = get_preset(name, dyson_init=init, **params)
    except DomainError as exc:
        raise ConfigError(str(exc)) from None

    alphas = cfg.get("alphas")
    if not isinstance(alphas, list) or not alphas:
        raise ConfigError("'alphas' must be a non-empty list")
    try:
        alphas = tuple(check_alpha(a) for a in alphas)
    except (DomainError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad alpha: {exc}") from None

    t_max = _number(cfg, "t_max")
    if not t_max > 0:
        raise ConfigError("'t_max' must be positive")
    n_points = _number(cfg, "n_points", kind=int)
    if n_points < 2:
        raise ConfigError("'n_points' must be at least 2")
    tol = _number(cfg, "tol", 1e-12)
    if not tol > 0:
        raise ConfigError("'tol' must be positive")
    max_step = _number(cfg, "max_phase_step", 0.5 * np.pi)

    outputs = cfg.get("outputs", ["dyson_params"])
    if not isinstance(outputs, list) or not outputs or any(o not in OUTPUTS for o in outputs):
        raise ConfigError(f"'outputs' must be a non-empty list drawn from {', '.join(OUTPUTS)}")
    outputs = tuple(dict.fromkeys(outputs))
    return Scenario(preset, alphas, t_max, n_points, tol, outputs, max_step, source)


def load_scenario(path: str | Path) -> Scenario:
    path = Path(path)
    try:
        with path.open("rb") as fh:
            cfg = tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    return parse_scenario(cfg, source=path.name)


def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, str):
        return x
    if x is None:
        return ""
    return format(float(x), ".17g")


def _alpha_tag(alpha: float) -> str:
    return format(alpha, "g").replace(".", "p")


def _rows(kind: str, traj: Trajectory, preset: Preset):
    t = traj.t
    if kind == "dyson_params":
        p = traj.params
        lam = np.asarray(p.lambda_)
        return zip(t, p.kappa, lam.real, lam.imag, np.abs(lam), p.Lambda)
    psi = traj.states(preset.initial_state)
    if kind == "magnetization":
        return zip(t, *obs.magnetization(psi))
    if kind == "population":
        return zip(t, obs.population_difference(psi))
    if kind == "intensities":
        return zip(t, *obs.waveguide_intensities(psi))
    if kind == "invariant_report":
        return ((c.name, c.kind, c.value, c.tolerance, c.passed) for c in _audit.check(traj))
    raise ValueError(kind)


def _header(scn: Scenario, alpha: float, kind: str) -> list[str]:
    p = scn.preset
    params = " ".join(f"{k}={_fmt(v)}" for k, v in sorted(p.parameters.items()))
    d = p.dyson_init
    psi = " ".join(f"{_fmt(c.real)}{'+' if c.imag >= 0 else '-'}{_fmt(abs(c.imag))}j" for c in p.initial_state)
    return [
        f"# fracdyson {__version__}",
        f"# scenario: {scn.source}",
        f"# output: {kind}",
        f"# preset: {p.name} {params}",
        f"# alpha: {float(alpha)!r}",
        f"# grid: t_max={_fmt(scn.t_max)} n_points={scn.n_points}",
        f"# tol: {scn.tol!r} max_phase_step={scn.max_phase_step!r}",
        f"# dyson_init: kappa0={_fmt(d.kappa0)} re_lambda0={_fmt(d.lambda0.real)} "
        f"im_lambda0={_fmt(d.lambda0.imag)} Lambda0={_fmt(d.Lambda0)}",
        f"# initial_state: {psi}",
    ]


def trajectories(scn: Scenario):
    """Yield ``(alpha, Trajectory)`` for every order in the scenario."""
    for alpha in scn.alphas:
        try:
            yield alpha, evolve_preset(alpha, scn.preset, scn.grid, scn.tol, max_step=scn.max_phase_step)
        except FracDysonError as exc:
            exc.alpha_context = alpha
            raise


def run(scn: Scenario, out_dir: str | Path) -> list[Path]:
    """Write one CSV per requested output per alpha; returns the paths written."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for alpha, traj in trajectories(scn):
        for kind in scn.outputs:
            path = out_dir / f"{scn.preset.name}_{kind}_alpha{_alpha_tag(alpha)}.csv"
            lines = _header(scn, alpha, kind)
            lines.append(",".join(COLUMNS[kind]))
            lines.extend(",".join(_fmt(v) for v in row) for row in _rows(kind, traj, scn.preset))
            path.write_text("\n".join(lines) + "\n", encoding="utf-8")
            written.append(path)
    return written


def audit(scn: Scenario) -> dict:
    """Machine-readable invariant report for every alpha in the scenario."""
    report = {"scenario": scn.source, "preset": scn.preset.name, "version": __version__, "alphas": []}
    ok = True
    for alpha, traj in trajectories(scn):
        checks = _audit.check(traj)
        ok &= all(c.passed for c in checks)
        report["alphas"].append({"alpha": alpha, "checks": [c.as_dict() for c in checks]})
    report["passed"] = ok
    return report


def _diagnostic(exc: Exception) -> str:
    parts = [f"error={type(exc).__name__}"]
    alpha = getattr(exc, "alpha_context", None)
    if alpha is not None:
        parts.append(f"alpha={float(alpha)!r}")
    if isinstance(exc, PhaseJumpError):
        parts.append(f"index={exc.index}")
        if exc.t is not None:
            parts.append(f"t={float(exc.t)!r}")
    if isinstance(exc, NonConvergence):
        if exc.t is not None:
            parts.append(f"t={float(exc.t)!r}")
        if exc.z is not None:
            parts.append(f"z={exc.z!r}")
    parts.append("message=" + json.dumps(str(exc)))
    return " ".join(parts)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fracdyson", description=__doc__.split("\n\n")[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run", help="compute trajectories and write CSV files")
    p_run.add_argument("scenario")
    p_run.add_argument("--out", required=True, help="output directory")
    p_audit = sub.add_parser("audit", help="evaluate invariants and print a JSON report")
    p_audit.add_argument("scenario")
    p_pre = sub.add_parser("presets", help="inspect built-in presets")
    p_pre.add_argument("action", choices=["list"])
    return ap


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "presets":
            for name in PRESET_NAMES:
                params = " ".join(f"{k}={_fmt(v)}" for k, v in preset_defaults(name).items())
                print(f"{name} {params}")
            return 0
        scn = load_scenario(args.scenario)
        if args.command == "run":
            for path in run(scn, args.out):
                print(path)
            return 0
        report = audit(scn)
        print(json.dumps(report, indent=2))
        return 0 if report["passed"] else 1
    except ConfigError as exc:
        print(_diagnostic(exc), file=sys.stderr)
        return 2
    except FracDysonError as exc:
        print(_diagnostic(exc), file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
