"""Component kernels and assembly of the point-interaction propagator.

Three kernels share the quadratic phase E = e^{i q^2/4t}:

    gfree(t, x, z) = E_p / (2 sqrt(i pi t)),    p = x - z,
    g0(t, x, z)    = E_q / (2 sqrt(i pi t)),    q = |x| + z,
    g1(t, x, z, w) = Lambda(xi) E_q,            xi = q/(2 sqrt(it)) + w sqrt(it),

with the principal branches sqrt(it) = sqrt(t) e^{i pi/4} and
sqrt(i pi t) = sqrt(pi t) e^{i pi/4} used throughout.  The full propagator is

    G(t, x, y) = mu_+ g1(.; w_+) + mu_- g1(.; w_-) + mu_0 g0 + gfree,

with the mu coefficients looked up by the signs of (x, y).  Analytic x- and
t-derivatives of every component are exposed so PDE and jump residuals never
rely on finite differences.

Source points z may be real of either sign, or complex in the closed first
quadrant (where the kernels stay bounded along rotated rays); other complex
arguments raise DomainError.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import DomainError, EvaluationOverflowError, NonFiniteInputError
from .interaction import GreenCoefficients, SignPair, UnitaryInteraction, coefficients
from .special import erfcx

SQRT_I = cmath.exp(0.25j * math.pi)
_SQRT_PI = math.sqrt(math.pi)


def _check_time(t: float) -> float:
    t = float(t)
    if not math.isfinite(t):
        raise NonFiniteInputError("t must be finite")
    if t <= 0.0:
        raise DomainError(f"t must be positive, got {t}")
    return t


def _check_position(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise NonFiniteInputError("x must be finite")
    if x == 0.0:
        raise DomainError("x must be nonzero")
    return x


def _source_array(z) -> tuple[np.ndarray, bool]:
    """Validate source points: finite, and non-real ones confined to the
    closed first quadrant."""
    arr = np.asarray(z, dtype=complex)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if not np.isfinite(arr).all():
        raise NonFiniteInputError("source point must be finite")
    offaxis = arr.imag != 0.0
    if np.any(offaxis & ((arr.real < 0.0) | (arr.imag < 0.0))):
        raise DomainError(
            "non-real source points must satisfy Re z >= 0 and Im z >= 0"
        )
    return arr, scalar


def sqrt_it(t: float) -> complex:
    """Principal sqrt(i t) = sqrt(t) e^{i pi/4} for t > 0."""
    return math.sqrt(t) * SQRT_I


def sqrt_ipt(t: float) -> complex:
    """Principal sqrt(i pi t) for t > 0."""
    return math.sqrt(math.pi * t) * SQRT_I


def _lam_exp(t: float, q: np.ndarray, omega: float) -> tuple[np.ndarray, np.ndarray]:
    """(Lambda(xi) E, E) with E = e^{i q^2/4t} and the reflection fused.

    On Re(xi) < 0 the product is rewritten via xi^2 + i q^2/4t =
    omega q + i omega^2 t, which never forms e^{xi^2} on its own and so
    survives arguments whose reflected exponential alone would overflow.
    """
    sit = sqrt_it(t)
    xi = q / (2.0 * sit) + omega * sit
    E = np.exp(0.25j * q * q / t)
    neg = xi.real < 0.0
    lam = erfcx(np.where(neg, -xi, xi))
    lam = np.atleast_1d(lam)
    lamE = lam * E
    if np.any(neg):
        refl = 2.0 * np.exp(omega * q[neg] + 1j * omega * omega * t)
        lamE[neg] = refl - lamE[neg]
        if not np.isfinite(lamE[neg]).all():
            raise EvaluationOverflowError("reflected kernel exponent overflowed")
    return lamE, E


def _finite_or_raise(out: np.ndarray, what: str) -> np.ndarray:
    if not np.isfinite(out).all():
        raise EvaluationOverflowError(f"{what} evaluation overflowed")
    return out


def gfree(t: float, x: float, z):
    """Free kernel e^{i (x-z)^2/4t} / (2 sqrt(i pi t)); z scalar or array."""
    t = _check_time(t)
    x = _check_position(x)
    arr, scalar = _source_array(z)
    p = x - arr
    out = np.exp(0.25j * p * p / t) / (2.0 * sqrt_ipt(t))
    _finite_or_raise(out, "gfree")
    return complex(out[0]) if scalar else out


def g0(t: float, x: float, z):
    """Mirror kernel e^{i (|x|+z)^2/4t} / (2 sqrt(i pi t))."""
    t = _check_time(t)
    x = _check_position(x)
    arr, scalar = _source_array(z)
    q = abs(x) + arr
    out = np.exp(0.25j * q * q / t) / (2.0 * sqrt_ipt(t))
    _finite_or_raise(out, "g0")
    return complex(out[0]) if scalar else out


def g1(t: float, x: float, z, omega: float):
    """Boundary-layer kernel Lambda(xi) e^{i q^2/4t} with decay rate omega."""
    t = _check_time(t)
    x = _check_position(x)
    omega = float(omega)
    if not math.isfinite(omega):
        raise NonFiniteInputError("omega must be finite")
    arr, scalar = _source_array(z)
    lamE, _ = _lam_exp(t, abs(x) + arr, omega)
    _finite_or_raise(lamE, "g1")
    return complex(lamE[0]) if scalar else lamE


def _as_coefficients(c) -> GreenCoefficients:
    if isinstance(c, UnitaryInteraction):
        return coefficients(c)
    if isinstance(c, GreenCoefficients):
        return c
    raise TypeError(
        "expected GreenCoefficients or UnitaryInteraction, got "
        f"{type(c).__name__}"
    )


def _real_targets(y) -> tuple[np.ndarray, bool]:
    yv = np.asarray(y, dtype=float)
    scalar = yv.ndim == 0
    yv = np.atleast_1d(yv)
    if not np.isfinite(yv).all():
        raise NonFiniteInputError("y must be finite")
    if np.any(yv == 0.0):
        raise DomainError("y must be nonzero")
    return yv, scalar


def _assemble(c: GreenCoefficients, t: float, x: float, yv: np.ndarray, mode: str) -> np.ndarray:
    """Shared evaluator for green and its analytic derivatives.

    mode selects the component formulas: "value", "dx", "dxx", or "dt".
    Terms whose mu coefficient is exactly zero are skipped, so e.g. the
    free particle reproduces gfree bitwise.
    """
    sipt = sqrt_ipt(t)
    sit = sqrt_it(t)
    sgn_x = 1.0 if x > 0 else -1.0
    p = x - yv
    ep = np.exp(0.25j * p * p / t)

    if mode == "value":
        out = ep / (2.0 * sipt)
    elif mode == "dx":
        out = (0.5j * p / t) * ep / (2.0 * sipt)
    elif mode == "dxx":
        out = (0.5 / t) * (1j - 0.5 * p * p / t) * ep / (2.0 * sipt)
    else:
        out = -(0.5 / t) * (1.0 + 0.5j * p * p / t) * ep / (2.0 * sipt)

    q = abs(x) + np.abs(yv)
    eq = np.exp(0.25j * q * q / t)
    sx = 1 if x > 0 else -1

    for sy in (1, -1):
        m = (yv > 0) if sy > 0 else (yv < 0)
        if not m.any():
            continue
        s = SignPair(sx, sy)
        qm, em = q[m], eq[m]
        for mu, omega in (
            (c.mu_plus[s], c.omega_plus),
            (c.mu_minus[s], c.omega_minus),
        ):
            if mu == 0.0:
                continue
            lamE, E = _lam_exp(t, qm, omega)
            if mode == "value":
                out[m] += mu * lamE
            elif mode == "dx":
                out[m] += mu * sgn_x * (omega * lamE - E / sipt)
            elif mode == "dxx":
                out[m] += mu * (omega * omega * lamE - (omega + 0.5j * qm / t) * E / sipt)
            else:
                out[m] += mu * (
                    1j * omega * omega * lamE
                    + (qm / (2.0 * sit) - omega * sit) * E / (t * _SQRT_PI)
                )
        mu0 = c.mu_zero[s]
        if mu0 != 0.0:
            if mode == "value":
                out[m] += mu0 * em / (2.0 * sipt)
            elif mode == "dx":
                out[m] += mu0 * sgn_x * (0.5j * qm / t) * em / (2.0 * sipt)
            elif mode == "dxx":
                out[m] += mu0 * (0.5 / t) * (1j - 0.5 * qm * qm / t) * em / (2.0 * sipt)
            else:
                out[m] += mu0 * -(0.5 / t) * (1.0 + 0.5j * qm * qm / t) * em / (2.0 * sipt)
    return _finite_or_raise(out, "green")


def green(c, t: float, x: float, y):
    """Full propagator G(t, x, y) for real nonzero x, y; y may be an array."""
    c = _as_coefficients(c)
    t = _check_time(t)
    x = _check_position(x)
    yv, scalar = _real_targets(y)
    out = _assemble(c, t, x, yv, "value")
    return complex(out[0]) if scalar else out


def green_dx(c, t: float, x: float, y):
    """Analytic spatial derivative of G at real nonzero x, y."""
    c = _as_coefficients(c)
    t = _check_time(t)
    x = _check_position(x)
    yv, scalar = _real_targets(y)
    out = _assemble(c, t, x, yv, "dx")
    return complex(out[0]) if scalar else out


def green_dxx(c, t: float, x: float, y):
    """Analytic second spatial derivative of G."""
    c = _as_coefficients(c)
    t = _check_time(t)
    x = _check_position(x)
    yv, scalar = _real_targets(y)
    out = _assemble(c, t, x, yv, "dxx")
    return complex(out[0]) if scalar else out


def green_dt(c, t: float, x: float, y):
    """Analytic time derivative of G."""
    c = _as_coefficients(c)
    t = _check_time(t)
    x = _check_position(x)
    yv, scalar = _real_targets(y)
    out = _assemble(c, t, x, yv, "dt")
    return complex(out[0]) if scalar else out


def _one_sided(c: GreenCoefficients, t: float, y: float) -> tuple[np.ndarray, np.ndarray]:
    """Boundary values and x-derivatives of G at x -> 0+ and x -> 0-.

    Realized by substituting |x| = 0 into the component formulas and
    selecting the mu tables by the limiting sign, never by shrinking x.
    Returns (values[2], derivatives[2]) ordered (0+, 0-).
    """
    sipt = sqrt_ipt(t)
    sy = 1 if y > 0 else -1
    qa = np.array([abs(y)])
    E = complex(np.exp(0.25j * qa[0] * qa[0] / t))
    vals = np.zeros(2, dtype=complex)
    ders = np.zeros(2, dtype=complex)
    for row, sx in enumerate((1, -1)):
        s = SignPair(sx, sy)
        val = (c.mu_zero[s] + 1.0) * E / (2.0 * sipt)
        der = (
            (0.25j / t)
            * (sx * c.mu_zero[s] * abs(y) - y)
            * E
            / sipt
        )
        for mu, omega in (
            (c.mu_plus[s], c.omega_plus),
            (c.mu_minus[s], c.omega_minus),
        ):
            if mu == 0.0:
                continue
            lamE, _ = _lam_exp(t, qa, omega)
            val += mu * lamE[0]
            der += sx * mu * (omega * lamE[0] - E / sipt)
        vals[row] = val
        ders[row] = der
    return vals, ders


def jump_residual(c, j: UnitaryInteraction, t: float, y: float) -> np.ndarray:
    """Residual of the interface condition coupling the one-sided limits:

        (I - J) [G(0+); G(0-)] - i (I + J) [dG(0+); -dG(0-)].

    Vanishes identically (to rounding) for every valid interaction.
    """
    c = _as_coefficients(c)
    t = _check_time(t)
    y = _check_position(float(y))
    vals, ders = _one_sided(c, t, y)
    jm = j.matrix()
    eye = np.eye(2, dtype=complex)
    dvec = np.array([ders[0], -ders[1]])
    return (eye - jm) @ vals - 1j * (eye + jm) @ dvec
