"""numba-compiled erfcx kernel: one scalar core plus a flat-array loop.

Same algorithm and operation order as ``_kernels_numpy``.  The coefficient
table is passed as an argument (not captured as a global) so ``cache=True``
stays valid across interpreter runs.
"""

from __future__ import annotations

import numba as nb
import numpy as np

from ._weideman import CF_DEPTH, CF_RADIUS_SQ, INV_SQRT_PI, POLY_COEFFS, SCALE_L


@nb.njit(nb.complex128(nb.complex128, nb.float64[:], nb.float64), cache=True)
def _erfcx_right_scalar(u, coeffs, ell):
    if u.real * u.real + u.imag * u.imag >= CF_RADIUS_SQ:
        s = 1j * u
        r = 0.0 + 0.0j
        for k in range(CF_DEPTH, 0, -1):
            r = (0.5 * k) / (s - r)
        return (1j * INV_SQRT_PI) / (s - r)
    den = ell + u
    zz = (ell - u) / den
    p = 0.0 + 0.0j
    for c in coeffs:
        p = p * zz + c
    return 2.0 * p / (den * den) + INV_SQRT_PI / den


@nb.njit(nb.complex128[:](nb.complex128[:], nb.float64[:], nb.float64), cache=True)
def _erfcx_flat(z, coeffs, ell):
    out = np.empty_like(z)
    for i in range(z.shape[0]):
        zi = z[i]
        if zi.real < 0.0:
            out[i] = 2.0 * np.exp(zi * zi) - _erfcx_right_scalar(-zi, coeffs, ell)
        else:
            out[i] = _erfcx_right_scalar(zi, coeffs, ell)
    return out


def erfcx_kernel(z: np.ndarray) -> np.ndarray:
    """erfcx on a flat complex128 array via the compiled loop."""
    return _erfcx_flat(z, POLY_COEFFS, SCALE_L)
