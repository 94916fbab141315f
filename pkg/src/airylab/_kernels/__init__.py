"""Kernel backend selection.

Imports the compiled Cython core when it built, otherwise the pure-numpy
fallback.  Set AIRYLAB_PURE_PYTHON=1 to force the fallback (used by the
benchmark and by the kernel tests to exercise both paths).
"""

import os

import numpy as np

from . import _pyfallback

_force_py = os.environ.get("AIRYLAB_PURE_PYTHON", "").strip().lower() not in (
    "", "0", "false", "no")

if _force_py:
    _impl = _pyfallback
    BACKEND = "python"
else:
    try:
        from . import _core as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _pyfallback
        BACKEND = "python"


def airy_pair(x):
    """(Ai, Ai') for a float64 array of any shape; scalars give 0-d arrays."""
    arr = np.ascontiguousarray(x, dtype=np.float64)
    flat = arr.reshape(-1)
    ai, aip = _impl.airy_pair(flat)
    return ai.reshape(arr.shape), aip.reshape(arr.shape)


def jacobi_eigh(a, tol_factor=1e-12, max_sweeps=50):
    """Cyclic Jacobi on a copy of the symmetric matrix `a`."""
    work = np.array(a, dtype=np.float64, order="C", copy=True)
    return _impl.jacobi_eigh(work, tol_factor, max_sweeps)
