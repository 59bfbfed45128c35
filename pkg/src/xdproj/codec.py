"""Projection-based compression and decompression of 1-D, 2-D and N-D signals.

Compressing a signal to smaller dims is a projection onto the smaller space;
decompressing is the projection back. The same ``CodecSpec`` drives both
directions, and nothing stops a "compression" target from being larger.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from ._checks import Side, as_hypermatrix, as_matrix, as_side, check_dim, checked_prod
from .errors import ShapeError
from .hypermatrix import apply_axis
from .projection import project, projector
from .xspace import xdist


@dataclass(frozen=True)
class CodecSpec:
    source_dims: tuple
    target_dims: tuple
    side: Side = Side.LEFT

    def __post_init__(self):
        src = tuple(check_dim(d, "source dimension") for d in self.source_dims)
        dst = tuple(check_dim(d, "target dimension") for d in self.target_dims)
        if not src:
            raise ShapeError("a codec needs at least one axis")
        if len(src) != len(dst):
            raise ShapeError(f"source has {len(src)} axes but target has {len(dst)}")
        checked_prod(*src)
        checked_prod(*dst)
        object.__setattr__(self, "source_dims", src)
        object.__setattr__(self, "target_dims", dst)
        object.__setattr__(self, "side", as_side(self.side))

    @property
    def compression_ratio(self):
        return math.prod(self.target_dims) / math.prod(self.source_dims)


@dataclass(frozen=True)
class RoundTripReport:
    l2_error: float
    dv_error: float
    rmse: float
    compression_ratio: float

    def items(self):
        """Fields in their fixed report order."""
        return [
            ("l2_error", self.l2_error),
            ("rmse", self.rmse),
            ("dv_error", self.dv_error),
            ("compression_ratio", self.compression_ratio),
        ]


def compress_1d(x, m, side=Side.LEFT):
    return project(x, m, side)


def decompress_1d(y, n, side=Side.LEFT):
    return project(y, n, side)


def _sandwich(a, rows, cols, side):
    a = as_matrix(a)
    pr = projector(a.shape[0], rows, side).matrix
    pc = projector(a.shape[1], cols, side).matrix
    return kernels.matmul(kernels.matmul(pr, a), pc.T)


def compress_2d(a, rows, cols, side=Side.LEFT):
    """``P_rows @ a @ P_cols.T`` with the projectors onto ``rows`` and ``cols``."""
    return _sandwich(a, rows, cols, side)


def decompress_2d(b, rows, cols, side=Side.LEFT):
    return _sandwich(b, rows, cols, side)


def _project_axes(a, dims, side):
    for axis, n in enumerate(dims):
        if a.shape[axis] != n:
            a = apply_axis(a, axis, projector(a.shape[axis], n, side).matrix)
    return a


def compress_nd(a, spec):
    a = as_hypermatrix(a)
    if a.shape != spec.source_dims:
        raise ShapeError(f"signal dims {a.shape} do not match codec source dims {spec.source_dims}")
    return _project_axes(a.copy(), spec.target_dims, spec.side)


def decompress_nd(b, spec):
    b = as_hypermatrix(b)
    if b.shape != spec.target_dims:
        raise ShapeError(f"payload dims {b.shape} do not match codec target dims {spec.target_dims}")
    return _project_axes(b.copy(), spec.source_dims, spec.side)


def staged_kron_operator(src, dst, side=Side.LEFT):
    """Dense operator mapping the vector form of ``src`` dims to ``dst`` dims.

    Built as the product of the stages ``I_{src[:i]} ⊗ P_i ⊗ I_{dst[i+1:]}``
    applied from the last axis to the first.
    """
    src = tuple(check_dim(d) for d in src)
    dst = tuple(check_dim(d) for d in dst)
    if len(src) != len(dst):
        raise ShapeError("source and target orders differ")
    op = np.eye(checked_prod(*src))
    for i in reversed(range(len(src))):
        op = kernels.matmul(_stage(src, dst, i, side), op)
    return op


def _stage(src, dst, i, side):
    # axes after i already have their new lengths
    pre = np.eye(checked_prod(1, *src[:i]))
    post = np.eye(checked_prod(1, *dst[i + 1:]))
    return np.kron(np.kron(pre, projector(src[i], dst[i], side).matrix), post)


def compress_nd_kron(a, spec):
    """Same result as ``compress_nd``, through the vectorized operator.

    Applies each Kronecker stage to the vector form in turn; memory is
    quadratic in the signal size.
    """
    a = as_hypermatrix(a)
    if a.shape != spec.source_dims:
        raise ShapeError(f"signal dims {a.shape} do not match codec source dims {spec.source_dims}")
    return _kron_stages(a, spec.source_dims, spec.target_dims, spec.side)


def decompress_nd_kron(b, spec):
    b = as_hypermatrix(b)
    if b.shape != spec.target_dims:
        raise ShapeError(f"payload dims {b.shape} do not match codec target dims {spec.target_dims}")
    return _kron_stages(b, spec.target_dims, spec.source_dims, spec.side)


def _kron_stages(a, src, dst, side):
    v = a.reshape(-1)
    for i in reversed(range(len(src))):
        v = kernels.matvec(_stage(src, dst, i, side), v)
    return v.reshape(dst)


def roundtrip(a, spec):
    """Compress, decompress and measure the reconstruction error.

    Returns ``(compressed, recovered, report)``.
    """
    a = as_hypermatrix(a)
    b = compress_nd(a, spec)
    a_hat = decompress_nd(b, spec)
    x, x_hat = a.reshape(-1), a_hat.reshape(-1)
    diff = x_hat - x
    l2 = math.sqrt(kernels.dot(diff, diff))
    report = RoundTripReport(
        l2_error=l2,
        dv_error=xdist(x_hat, x, spec.side),
        rmse=l2 / math.sqrt(x.size),
        compression_ratio=spec.compression_ratio,
    )
    return b, a_hat, report
