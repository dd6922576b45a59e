"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "MelonTFTError",
    "DivergentIntegralError",
    "ShapeMismatchError",
    "EvaluationDomainError",
    "NotConvergedError",
    "CoincidentCoordinatesError",
]


class MelonTFTError(Exception):
    """Base class for package-specific failures."""


class DivergentIntegralError(MelonTFTError):
    """A transverse integral was requested for a term that diverges.

    Only the bare free propagator is integrated with Taylor subtraction;
    any other term with fewer than two powers of (1+|x|^2) in the
    denominator signals a logically impossible input.
    """


class ShapeMismatchError(MelonTFTError):
    """A generated series contains a term outside the closed-form shape.

    Raised by coefficient extraction; hitting this at some order would
    falsify the conjectured all-order structure rather than indicate a
    recoverable condition.
    """


class EvaluationDomainError(MelonTFTError):
    """The evaluation left the validated real-coupling region."""


class NotConvergedError(MelonTFTError):
    """A quadrature result did not converge within its evaluation budget."""


class CoincidentCoordinatesError(MelonTFTError):
    """Two external momenta share a component of the same colour.

    The higher-point recursion divides by differences of squared
    first-colour components; coincident configurations are excluded from
    the domain and are not handled by taking limits.
    """
