"""Cross-dimensional projectors.

``projector(m, n)`` is the ``n x m`` matrix sending ``x in R^m`` to the point
of ``R^n`` nearest to it in the normalized distance. On the left system it
block-averages a piecewise-constant signal; on the right system it averages
the tiles of a periodic one.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from ._checks import Side, as_side, as_vector, check_dim, checked_lcm, checked_prod
from .errors import ShapeError


@dataclass(frozen=True, eq=False)
class Projector:
    from_dim: int
    to_dim: int
    side: Side
    matrix: np.ndarray

    def __call__(self, x):
        x = as_vector(x)
        if x.size != self.from_dim:
            raise ShapeError(f"projector expects dimension {self.from_dim}, got {x.size}")
        return kernels.matvec(self.matrix, x)


def _left_matrix(m, n, t):
    # entry (i, j) = overlap of output cell i with input cell j on a grid of t, over t/n
    i = np.arange(n)[:, None]
    j = np.arange(m)[None, :]
    a, b = t // n, t // m
    lo = np.maximum(i * a, j * b)
    hi = np.minimum((i + 1) * a, (j + 1) * b)
    overlap = np.clip(hi - lo, 0, None)
    return overlap / a


def _right_matrix(m, n, t):
    # exactly one k < t has k = i mod n and k = j mod m, iff i = j mod gcd(m, n)
    g = math.gcd(m, n)
    i = np.arange(n)[:, None]
    j = np.arange(m)[None, :]
    return np.where((i - j) % g == 0, 1.0 / (t // n), 0.0)


@lru_cache(maxsize=256)
def _cached(m, n, side):
    t = checked_lcm(m, n)
    checked_prod(m, n)
    mat = _left_matrix(m, n, t) if side is Side.LEFT else _right_matrix(m, n, t)
    mat.setflags(write=False)
    return Projector(m, n, side, mat)


def projector(m, n, side=Side.LEFT):
    """Projector from ``R^m`` onto ``R^n`` (an ``n x m`` row-stochastic matrix)."""
    return _cached(check_dim(m, "source dimension"), check_dim(n, "target dimension"), as_side(side))


def projector_definition(m, n, side=Side.LEFT):
    """The projector built literally from its Kronecker product formula.

    Left: ``(n/t)(I_n ⊗ 1_{t/n}^T)(I_m ⊗ 1_{t/m})``; right:
    ``(n/t)(1_{t/n}^T ⊗ I_n)(1_{t/m} ⊗ I_m)``. Allocates ``O(t*(m+n))``
    memory, so it is meant for checking ``projector``, not for production.
    """
    m = check_dim(m)
    n = check_dim(n)
    side = as_side(side)
    t = checked_lcm(m, n)
    jn = np.ones((1, t // n))
    jm = np.ones((t // m, 1))
    if side is Side.LEFT:
        left, right = np.kron(np.eye(n), jn), np.kron(np.eye(m), jm)
    else:
        left, right = np.kron(jn, np.eye(n)), np.kron(jm, np.eye(m))
    return (n / t) * kernels.matmul(left, right)


def project(x, n, side=Side.LEFT):
    """Nearest point of ``R^n`` to ``x`` in the normalized distance."""
    x = as_vector(x)
    return projector(x.size, n, side)(x)
