"""Vectorized numpy implementation of the erfcx kernel.

Mirrors ``_kernels_numba`` operation for operation; see ``_weideman`` for the
branch layout.  No validation here: wrappers in :mod:`pointgreen.special`
check finiteness on the way in and out.
"""

from __future__ import annotations

import numpy as np

from ._weideman import CF_DEPTH, CF_RADIUS_SQ, INV_SQRT_PI, POLY_COEFFS, SCALE_L


def _erfcx_right(u: np.ndarray) -> np.ndarray:
    """erfcx on Re u >= 0 (flat complex128 array)."""
    out = np.empty_like(u)
    big = (u.real * u.real + u.imag * u.imag) >= CF_RADIUS_SQ

    small = ~big
    if small.any():
        us = u[small]
        num = SCALE_L - us
        den = SCALE_L + us
        zz = num / den
        p = np.zeros_like(zz)
        for c in POLY_COEFFS:
            p = p * zz + c
        out[small] = 2.0 * p / (den * den) + INV_SQRT_PI / den

    if big.any():
        s = 1j * u[big]
        r = np.zeros_like(s)
        for k in range(CF_DEPTH, 0, -1):
            r = (0.5 * k) / (s - r)
        out[big] = (1j * INV_SQRT_PI) / (s - r)

    return out


def erfcx_kernel(z: np.ndarray) -> np.ndarray:
    """erfcx on a flat complex128 array; left half-plane via reflection.

    Overflow in the reflection term propagates as inf/nan; the wrapper turns
    any non-finite output into an error.
    """
    neg = z.real < 0.0
    val = _erfcx_right(np.where(neg, -z, z))
    if not neg.any():
        return val
    with np.errstate(over="ignore", invalid="ignore"):
        refl = 2.0 * np.exp(z * z) - val
    return np.where(neg, refl, val)
