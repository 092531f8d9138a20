"""Exception and warning types shared by every module of the package."""

from __future__ import annotations


class LevyLaplaceError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LevyLaplaceError, ValueError):
    """An argument lies outside the mathematical domain of the function."""


class UnsupportedError(LevyLaplaceError, ValueError):
    """The arguments are valid in principle but outside the supported range."""


class ConvergenceError(LevyLaplaceError, ArithmeticError):
    """A series or iteration hit its budget before converging."""


class SeriesOverflowError(LevyLaplaceError, OverflowError):
    """A partial sum left the representable floating point range."""

    def __init__(self, message: str, partial_sum_magnitude: float) -> None:
        super().__init__(f"{message} (|partial sum| ~ {partial_sum_magnitude:.3e})")
        self.partial_sum_magnitude = partial_sum_magnitude


class IntegrationError(LevyLaplaceError, ArithmeticError):
    """Adaptive quadrature failed to reach the requested tolerance."""

    def __init__(self, message: str, *, estimate=None, error=None, subdivisions: int = 0) -> None:
        super().__init__(f"{message} (subdivisions={subdivisions}, error estimate={error})")
        self.estimate = estimate
        self.error = error
        self.subdivisions = subdivisions


class InversionError(LevyLaplaceError, ArithmeticError):
    """Numerical Laplace inversion produced a non-finite result."""


class VerificationError(LevyLaplaceError):
    """An identity check could not be carried out (as opposed to failing)."""


class AccuracyWarning(UserWarning):
    """The returned value is finite but may miss the requested accuracy."""
