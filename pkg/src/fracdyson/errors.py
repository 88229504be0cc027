"""Exception hierarchy shared by every stage of the pipeline."""

from __future__ import annotations


class FracDysonError(Exception):
    """Base class for all errors raised by :mod:`fracdyson`."""


class DomainError(FracDysonError, ValueError):
    """An argument lies outside the admissible domain."""


class NonConvergence(FracDysonError, ArithmeticError):
    """A series could not be certified to the requested tolerance."""

    def __init__(self, message: str, *, alpha: float | None = None, z: complex | None = None,
                 t: float | None = None):
        super().__init__(message)
        self.alpha = alpha
        self.z = z
        self.t = t


class PhaseJumpError(FracDysonError, ArithmeticError):
    """The time grid is too coarse to unwrap the phase of the determinant."""

    def __init__(self, message: str, *, index: int, t: float | None = None):
        super().__init__(message)
        self.index = index
        self.t = t


class PositivityViolation(FracDysonError, ArithmeticError):
    """A quantity that must stay strictly positive did not."""


class InternalInconsistency(FracDysonError, ArithmeticError):
    """Two independent routes to the same quantity disagree."""


class DegenerateState(FracDysonError, ValueError):
    """A zero state vector was passed where a normalisable one is required."""


class UnsupportedModel(FracDysonError, ValueError):
    """The requested model variant is not implemented."""


class ConfigError(FracDysonError, ValueError):
    """A scenario file is malformed or incomplete."""
