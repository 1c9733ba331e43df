"""Overflow-safe evaluation of the scaled complementary error function

    lambda_fn(z) = exp(z^2) * (1 - erf(z)) = erfcx(z)

together with its closed-form derivative and the two half-line integral
identities built on it:

    integral_0^inf exp(-a x^2 - b x) dx
        = sqrt(pi)/(2 sqrt(a)) * lambda_fn(b/(2 sqrt(a)))

    integral_0^inf exp(-a x^2 - b x) lambda_fn(sqrt(a) x + c) dx
        = -1/(2 sqrt(a)) * (lambda_fn(c) - lambda_fn(d))/(c - d),
          d = b/(2 sqrt(a)),

the quotient taken in the removable-limit sense lambda' when c == d.

All functions accept python/numpy complex scalars; ``erfcx`` and
``lambda_fn`` also accept arrays.  Evaluation is binary64 end-to-end; for
Re(z) < 0 the reflection identity is used and an
:class:`~pointgreen.errors.EvaluationOverflowError` is raised where
``exp(z^2)`` leaves double range instead of returning Inf.
"""

from __future__ import annotations

import math

import numpy as np

from . import backend
from .errors import EvaluationOverflowError, NonFiniteInputError, NonPositiveAError

SQRT_PI = math.sqrt(math.pi)
TWO_OVER_SQRT_PI = 2.0 / SQRT_PI

# Switch to the Taylor form of the difference quotient when
# |c - d| < QUOTIENT_SWITCH * (1 + |c|).
QUOTIENT_SWITCH = 1e-8


def _as_complex_array(z, name: str) -> tuple[np.ndarray, bool]:
    arr = np.asarray(z, dtype=np.complex128)
    if not np.isfinite(arr).all():
        raise NonFiniteInputError(f"{name} must be finite")
    return arr, arr.ndim == 0


def erfcx(z):
    """Scaled complementary error function exp(z^2)*erfc(z), entire in z.

    Scalar in, scalar out; array in, array out.  Raises
    NonFiniteInputError for NaN/Inf input and EvaluationOverflowError when
    the left-half-plane reflection exceeds double range.
    """
    arr, scalar = _as_complex_array(z, "z")
    out = backend.erfcx_raw(np.ascontiguousarray(arr.reshape(-1)))
    if not np.isfinite(out).all():
        raise EvaluationOverflowError(
            "erfcx overflows double range for Re(z) < 0 with Re(z^2) > 709"
        )
    return complex(out[0]) if scalar else out.reshape(arr.shape)


def lambda_fn(z):
    """exp(z^2)*(1 - erf(z)); identical to :func:`erfcx` by definition."""
    return erfcx(z)


def lambda_derivative(z):
    """Closed-form derivative 2*z*lambda_fn(z) - 2/sqrt(pi).

    Never a finite difference; propagates lambda_fn errors.
    """
    arr, scalar = _as_complex_array(z, "z")
    zv = complex(arr) if scalar else arr
    return 2.0 * zv * erfcx(zv) - TWO_OVER_SQRT_PI


def lambda_gaussian_integral(a, b):
    """integral_0^inf exp(-a x^2 - b x) dx for a > 0, b complex."""
    a = _positive_a(a)
    b = complex(b)
    sa = math.sqrt(a)
    return (SQRT_PI / (2.0 * sa)) * erfcx(b / (2.0 * sa))


def lambda_lambda_integral(a, b, c):
    """integral_0^inf exp(-a x^2 - b x) lambda_fn(sqrt(a) x + c) dx.

    Equals -(1/(2 sqrt(a))) * quotient(c, b/(2 sqrt(a))) where quotient is the
    stabilized difference quotient of lambda_fn (removable-limit branch at
    coincidence).
    """
    a = _positive_a(a)
    b, c = complex(b), complex(c)
    for name, v in (("b", b), ("c", c)):
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise NonFiniteInputError(f"{name} must be finite")
    sa = math.sqrt(a)
    return -lambda_quotient(c, b / (2.0 * sa)) / (2.0 * sa)


def lambda_quotient(c: complex, d: complex) -> complex:
    """(lambda_fn(c) - lambda_fn(d)) / (c - d), removable-limit safe.

    Within |c - d| < 1e-8*(1+|c|) the two-branch form loses digits to
    cancellation, so a first-order Taylor form in (c - d) around c is used:
    lambda'(c) - (c - d)/2 * lambda''(c), with lambda'' from the recurrence
    lambda'' = 2*lambda + 2*z*lambda'.
    """
    h = c - d
    if abs(h) < QUOTIENT_SWITCH * (1.0 + abs(c)):
        lam = erfcx(c)
        lam1 = 2.0 * c * lam - TWO_OVER_SQRT_PI
        lam2 = 2.0 * lam + 2.0 * c * lam1
        return lam1 - 0.5 * h * lam2
    return (erfcx(c) - erfcx(d)) / h


def _positive_a(a) -> float:
    a = float(a)
    if not math.isfinite(a):
        raise NonFiniteInputError("a must be finite")
    if a <= 0.0:
        raise NonPositiveAError(f"a must be > 0, got {a}")
    return a
