"""Numpy implementations of the hot kernels.

Every output entry is accumulated as ``acc = 0; acc += p_0; acc += p_1; ...``
over ascending ``k``, the same order the compiled kernels use, so both
backends agree bit for bit.
"""

import numpy as np


def matmul(a, b):
    m, K = a.shape
    if b.shape[0] != K:
        raise ValueError(f"inner dimensions differ: {a.shape} @ {b.shape}")
    out = np.zeros((m, b.shape[1]))
    for k in range(K):
        out += a[:, k, None] * b[None, k, :]
    return out


def apply_axis(data, m):
    """``out[p, r, q] = sum_k m[r, k] * data[p, k, q]`` for a (P, K, Q) block."""
    P, K, Q = data.shape
    if m.shape[1] != K:
        raise ValueError(f"operator width {m.shape[1]} != axis length {K}")
    out = np.zeros((P, m.shape[0], Q))
    for k in range(K):
        out += m[None, :, k, None] * data[:, None, k, :]
    return out


def dot(x, y):
    if x.shape != y.shape:
        raise ValueError(f"length mismatch {x.shape} vs {y.shape}")
    if x.size == 0:
        return 0.0
    # add.accumulate is strictly sequential, unlike sum()'s pairwise reduction
    return float(np.add.accumulate(x * y)[-1])
