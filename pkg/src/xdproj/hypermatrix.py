"""Order-d hypermatrices as C-ordered numpy arrays.

The vector form lists entries in lexicographic order of the index tuple with
the last index varying fastest, which is numpy's C order. Axis arguments are
0-based, as everywhere in numpy.
"""

import numpy as np

from . import kernels
from ._checks import as_hypermatrix, as_matrix, as_vector, check_dim, checked_prod
from .errors import ShapeError


def vectorize(a):
    return as_hypermatrix(a).reshape(-1).copy()


def devectorize(v, dims):
    v = as_vector(v)
    dims = tuple(check_dim(d) for d in dims)
    if not dims:
        raise ShapeError("dims must be non-empty")
    if checked_prod(*dims) != v.size:
        raise ShapeError(f"vector of length {v.size} cannot fill dims {dims}")
    return v.reshape(dims).copy()


def _axis(a, axis):
    if not -a.ndim <= axis < a.ndim:
        raise ShapeError(f"axis {axis} out of range for order {a.ndim}")
    return axis % a.ndim


def contract(a, s, b, t):
    """Sum over axis ``s`` of ``a`` paired with axis ``t`` of ``b``.

    The result's axes are the remaining axes of ``a`` followed by the
    remaining axes of ``b``. For matrices, ``contract(a, 1, b, 0) == a @ b``.
    """
    a = as_hypermatrix(a)
    b = as_hypermatrix(b)
    s = _axis(a, s)
    t = _axis(b, t)
    if a.shape[s] != b.shape[t]:
        raise ShapeError(f"cannot contract axis of length {a.shape[s]} with one of length {b.shape[t]}")
    k = a.shape[s]
    rest_a = a.shape[:s] + a.shape[s + 1:]
    rest_b = b.shape[:t] + b.shape[t + 1:]
    lhs = np.moveaxis(a, s, -1).reshape(-1, k)
    rhs = np.moveaxis(b, t, 0).reshape(k, -1)
    out = kernels.matmul(lhs, rhs)
    return out.reshape(rest_a + rest_b) if rest_a + rest_b else out.reshape(1)


def apply_axis(a, axis, m):
    """Multiply every fibre of ``a`` along ``axis`` by the matrix ``m``.

    Equivalent to ``(I_pre ⊗ m ⊗ I_post) @ vectorize(a)`` but computed with
    strided loops instead of the big operator.
    """
    a = as_hypermatrix(a)
    m = as_matrix(m)
    axis = _axis(a, axis)
    if m.shape[1] != a.shape[axis]:
        raise ShapeError(f"operator has {m.shape[1]} columns, axis {axis} has length {a.shape[axis]}")
    pre = int(np.prod(a.shape[:axis], dtype=np.int64))
    post = int(np.prod(a.shape[axis + 1:], dtype=np.int64))
    out = kernels.apply_axis(a.reshape(pre, a.shape[axis], post), m)
    return out.reshape(a.shape[:axis] + (m.shape[0],) + a.shape[axis + 1:])


def axis_operator(dims, axis, m):
    """Dense ``I_pre ⊗ m ⊗ I_post`` acting on the vector form of a ``dims`` array."""
    m = as_matrix(m)
    dims = tuple(check_dim(d) for d in dims)
    if m.shape[1] != dims[axis]:
        raise ShapeError(f"operator has {m.shape[1]} columns, axis {axis} has length {dims[axis]}")
    pre = checked_prod(1, *dims[:axis])
    post = checked_prod(1, *dims[axis + 1:])
    return np.kron(np.kron(np.eye(pre), m), np.eye(post))
