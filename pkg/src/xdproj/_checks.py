import math
from enum import Enum

import numpy as np

from .errors import DimensionError, DimensionOverflowError, ShapeError

INT64_MAX = 2**63 - 1


class Side(str, Enum):
    """Which one-vector embedding a cross-dimensional operation uses.

    ``LEFT`` expands ``x`` as ``x ⊗ 1_k`` (each entry repeated), ``RIGHT``
    as ``1_k ⊗ x`` (whole vector tiled).
    """

    LEFT = "left"
    RIGHT = "right"


def as_side(side):
    try:
        return Side(side.lower() if isinstance(side, str) else side)
    except ValueError:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}") from None


def check_dim(k, name="dimension"):
    if isinstance(k, (bool, np.bool_)) or not isinstance(k, (int, np.integer)):
        raise DimensionError(f"{name} must be an integer, got {k!r}")
    k = int(k)
    if k < 1:
        raise DimensionError(f"{name} must be >= 1, got {k}")
    if k > INT64_MAX:
        raise DimensionOverflowError(f"{name} {k} exceeds 64-bit range")
    return k


def checked_lcm(a, b):
    t = math.lcm(a, b)
    if t > INT64_MAX:
        raise DimensionOverflowError(f"lcm({a}, {b}) = {t} exceeds 64-bit range")
    return t


def checked_prod(*factors):
    p = 1
    for f in factors:
        p *= int(f)
        if p > INT64_MAX:
            raise DimensionOverflowError(f"product of {factors} exceeds 64-bit range")
    return p


def _finite(a, what):
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{what} contains NaN or Inf")
    return a


def as_vector(x):
    """Return ``x`` as a contiguous finite float64 vector of length >= 1."""
    a = np.ascontiguousarray(x, dtype=np.float64)
    if a.ndim == 0:
        a = a.reshape(1)
    if a.ndim != 1:
        raise ShapeError(f"expected a vector, got an array of shape {a.shape}")
    if a.size == 0:
        raise DimensionError("vector dimension must be >= 1")
    return _finite(a, "vector")


def as_matrix(a):
    """Return ``a`` as a contiguous finite float64 matrix with both sides >= 1."""
    m = np.ascontiguousarray(a, dtype=np.float64)
    if m.ndim != 2:
        raise ShapeError(f"expected a matrix, got an array of shape {m.shape}")
    if 0 in m.shape:
        raise DimensionError(f"matrix shape {m.shape} has an empty side")
    return _finite(m, "matrix")


def as_hypermatrix(a):
    h = np.ascontiguousarray(a, dtype=np.float64)
    if h.ndim == 0:
        raise ShapeError("a hypermatrix needs order >= 1")
    if 0 in h.shape:
        raise DimensionError(f"hypermatrix dims {h.shape} contain a zero")
    return _finite(h, "hypermatrix")
