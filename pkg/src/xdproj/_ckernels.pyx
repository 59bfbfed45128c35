# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``.

Summation order per output entry is ascending ``k`` starting from 0.0.
"""

import numpy as np


def matmul(const double[:, ::1] a, const double[:, ::1] b):
    cdef Py_ssize_t m = a.shape[0], K = a.shape[1], n = b.shape[1]
    cdef Py_ssize_t i, j, k
    cdef double aik
    if b.shape[0] != K:
        raise ValueError(f"inner dimensions differ: ({m}, {K}) @ ({b.shape[0]}, {n})")
    out = np.zeros((m, n))
    cdef double[:, ::1] c = out
    with nogil:
        for i in range(m):
            for k in range(K):
                aik = a[i, k]
                for j in range(n):
                    c[i, j] = c[i, j] + aik * b[k, j]
    return out


def apply_axis(const double[:, :, ::1] data, const double[:, ::1] m):
    cdef Py_ssize_t P = data.shape[0], K = data.shape[1], Q = data.shape[2]
    cdef Py_ssize_t R = m.shape[0]
    cdef Py_ssize_t p, r, k, q
    cdef double mrk
    if m.shape[1] != K:
        raise ValueError(f"operator width {m.shape[1]} != axis length {K}")
    out = np.zeros((P, R, Q))
    cdef double[:, :, ::1] o = out
    with nogil:
        for p in range(P):
            for r in range(R):
                for k in range(K):
                    mrk = m[r, k]
                    for q in range(Q):
                        o[p, r, q] = o[p, r, q] + mrk * data[p, k, q]
    return out


def dot(const double[::1] x, const double[::1] y):
    cdef Py_ssize_t n = x.shape[0], k
    cdef double acc = 0.0
    if y.shape[0] != n:
        raise ValueError(f"length mismatch ({n},) vs ({y.shape[0]},)")
    with nogil:
        for k in range(n):
            acc = acc + x[k] * y[k]
    return acc
