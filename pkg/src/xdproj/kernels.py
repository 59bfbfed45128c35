"""Backend selection for the numeric kernels.

The compiled extension is used when it was built; otherwise the numpy
fallback is loaded. Set ``XDPROJ_KERNELS=python`` to force the fallback.
Both backends produce identical bits.
"""

import os

import numpy as np

from . import _pykernels

if os.environ.get("XDPROJ_KERNELS", "").lower() == "python":
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"
    else:
        BACKEND = "cython"


def matmul(a, b):
    """Matrix product with a fixed ascending-k summation order."""
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    return _impl.matmul(a, b)


def matvec(a, x):
    x = np.ascontiguousarray(x, dtype=np.float64)
    return matmul(a, x.reshape(-1, 1)).reshape(-1)


def apply_axis(data, m):
    """Apply ``m`` along the middle axis of a (P, K, Q) array."""
    data = np.ascontiguousarray(data, dtype=np.float64)
    m = np.ascontiguousarray(m, dtype=np.float64)
    return _impl.apply_axis(data, m)


def dot(x, y):
    x = np.ascontiguousarray(x, dtype=np.float64)
    y = np.ascontiguousarray(y, dtype=np.float64)
    return float(_impl.dot(x, y))
