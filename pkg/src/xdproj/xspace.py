"""Arithmetic and geometry on the union of all finite-dimensional spaces.

Vectors of different lengths are combined by expanding both to
``t = lcm(m, n)`` with one-vectors. The inner product is normalized by
``1/t`` so that it is invariant under such expansions.
"""

import math
from typing import NamedTuple

import numpy as np

from . import kernels
from ._checks import Side, as_side, as_vector, checked_lcm
from .errors import DegenerateError
from .stp import expand


class CanonicalVector(NamedTuple):
    rep: np.ndarray
    multiplicity: int


def _common(x, y, side):
    x = as_vector(x)
    y = as_vector(y)
    side = as_side(side)
    t = checked_lcm(x.size, y.size)
    return expand(x, t // x.size, side), expand(y, t // y.size, side)


def xadd(x, y, side=Side.LEFT):
    ex, ey = _common(x, y, side)
    return ex + ey


def xsub(x, y, side=Side.LEFT):
    ex, ey = _common(x, y, side)
    return ex - ey


def xscale(r, x):
    r = float(r)
    if not math.isfinite(r):
        raise ValueError("scale factor must be finite")
    return r * as_vector(x)


def _is_integral(x):
    return bool(np.all(x == np.round(x)))


def _tolerance(*vectors):
    if all(_is_integral(v) for v in vectors):
        return 0.0
    scale = max(float(np.max(np.abs(v))) for v in vectors)
    return 1e-9 * max(1.0, scale)


def _divisors_desc(n):
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]), reverse=True)


def canonical(x, side=Side.LEFT):
    """Smallest vector ``z`` and block length ``b`` that rebuild ``x``.

    Left: ``x = z ⊗ 1_b``; right: ``x = 1_b ⊗ z``. Integer-valued data is
    compared exactly, anything else within ``1e-9 * max(1, max|x|)``.
    """
    x = as_vector(x)
    side = as_side(side)
    n = x.size
    tol = _tolerance(x)
    for b in _divisors_desc(n):
        if b == 1:
            break
        if side is Side.LEFT:
            blocks = x.reshape(n // b, b)
            ok = np.max(np.abs(blocks - blocks[:, :1])) <= tol
            rep = blocks[:, 0]
        else:
            tiles = x.reshape(b, n // b)
            ok = np.max(np.abs(tiles - tiles[:1])) <= tol
            rep = tiles[0]
        if ok:
            return CanonicalVector(rep.copy(), b)
    return CanonicalVector(x.copy(), 1)


def equivalent(x, y, side=Side.LEFT):
    """True when ``x`` and ``y`` expand to the same vector."""
    cx = canonical(x, side).rep
    cy = canonical(y, side).rep
    if cx.size != cy.size:
        return False
    tol = _tolerance(as_vector(x), as_vector(y))
    return bool(np.max(np.abs(cx - cy)) <= tol)


def xinner(x, y, side=Side.LEFT):
    ex, ey = _common(x, y, side)
    return kernels.dot(ex, ey) / ex.size


def xnorm(x):
    """Dimension-normalized norm ``sqrt(x.x / n)``; the same on both sides."""
    x = as_vector(x)
    return math.sqrt(kernels.dot(x, x) / x.size)


def xdist(x, y, side=Side.LEFT):
    return xnorm(xsub(x, y, side))


def xangle(x, y, side=Side.LEFT):
    """Angle in radians between ``x`` and ``y``, in ``[0, pi]``."""
    nx, ny = xnorm(x), xnorm(y)
    if nx == 0.0 or ny == 0.0:
        raise DegenerateError("angle is undefined for a zero-norm vector")
    c = xinner(x, y, side) / (nx * ny)
    return math.acos(min(1.0, max(-1.0, c)))
