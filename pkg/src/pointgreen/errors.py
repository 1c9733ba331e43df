"""Exception hierarchy shared by every pointgreen module.

Every error raised on a public surface derives from :class:`PointGreenError`,
so callers (and the CLI) can separate library failures from programming
mistakes.  Validation errors double as ``ValueError`` and the overflow error
as ``OverflowError`` to stay idiomatic under ``except`` clauses.
"""

from __future__ import annotations


class PointGreenError(Exception):
    """Base class for all pointgreen errors."""


class NonFiniteInputError(PointGreenError, ValueError):
    """An input carried a NaN or infinity."""


class EvaluationOverflowError(PointGreenError, OverflowError):
    """The result exceeds double range (left half-plane reflection blow-up)."""


class NonPositiveAError(PointGreenError, ValueError):
    """The Gaussian decay parameter ``a`` must be strictly positive."""


class NotUnitaryError(PointGreenError, ValueError):
    """The interface matrix (or its parameters) fails the unitarity check."""


class ZeroStrengthError(PointGreenError, ValueError):
    """A named interaction requires a nonzero strength parameter."""


class DomainError(PointGreenError, ValueError):
    """An argument lies outside the supported domain (t <= 0, x*y = 0, sector)."""


class NoDecayError(PointGreenError, ValueError):
    """A quadrature was requested with a non-positive decay constant."""


class ToleranceNotMetError(PointGreenError, RuntimeError):
    """Adaptive bisection exhausted max_depth before reaching tolerance."""


class PoleCollisionError(PointGreenError, ArithmeticError):
    """A closed-form pole could not be resolved by the removable-limit branch."""


class BackendUnavailableError(PointGreenError, RuntimeError):
    """The requested computation backend cannot be loaded."""
