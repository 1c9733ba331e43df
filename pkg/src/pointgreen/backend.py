"""Backend selection for the hot kernels.

Two interchangeable implementations of the erfcx kernel exist:

* ``"numba"`` -- @njit scalar core with a compiled array loop,
* ``"numpy"`` -- pure vectorized numpy.

The active one is chosen at import from the environment variable
``POINTGREEN_BACKEND`` (``auto`` | ``numba`` | ``numpy``, default ``auto``:
numba when importable, numpy otherwise) and can be switched at runtime with
:func:`set_backend`.  Both run the identical algorithm; they are compared in
``benchmarks/bench_backends.py`` and in the test suite.
"""

from __future__ import annotations

import os
from typing import Callable

import numpy as np

from . import _kernels_numpy
from .errors import BackendUnavailableError

try:
    from . import _kernels_numba

    _HAS_NUMBA = True
except ImportError:
    _kernels_numba = None
    _HAS_NUMBA = False

_VALID = ("auto", "numba", "numpy")

_active_name = ""
_active_kernel: Callable[[np.ndarray], np.ndarray] = _kernels_numpy.erfcx_kernel


def available_backends() -> tuple[str, ...]:
    """Names accepted by :func:`set_backend` that can actually load."""
    return ("numba", "numpy") if _HAS_NUMBA else ("numpy",)


def set_backend(name: str) -> str:
    """Select the kernel backend; returns the resolved name.

    ``auto`` resolves to numba when importable.  Requesting ``numba`` without
    a working numba install raises :class:`BackendUnavailableError`.
    """
    global _active_name, _active_kernel
    if name not in _VALID:
        raise ValueError(f"backend must be one of {_VALID}, got {name!r}")
    resolved = name
    if name == "auto":
        resolved = "numba" if _HAS_NUMBA else "numpy"
    if resolved == "numba":
        if not _HAS_NUMBA:
            raise BackendUnavailableError("numba backend requested but numba cannot be imported")
        _active_kernel = _kernels_numba.erfcx_kernel
    else:
        _active_kernel = _kernels_numpy.erfcx_kernel
    _active_name = resolved
    return resolved


def active_backend() -> str:
    """Name of the backend currently answering kernel calls."""
    return _active_name


def kernel_for(name: str) -> Callable[[np.ndarray], np.ndarray]:
    """Fetch a specific backend's flat-array erfcx kernel (benchmark hook)."""
    if name == "numpy":
        return _kernels_numpy.erfcx_kernel
    if name == "numba":
        if not _HAS_NUMBA:
            raise BackendUnavailableError("numba backend requested but numba cannot be imported")
        return _kernels_numba.erfcx_kernel
    raise ValueError(f"backend must be 'numba' or 'numpy', got {name!r}")


def erfcx_raw(z: np.ndarray) -> np.ndarray:
    """Unvalidated erfcx on a flat complex128 array (internal hot path)."""
    return _active_kernel(z)


set_backend(os.environ.get("POINTGREEN_BACKEND", "auto"))
