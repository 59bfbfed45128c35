"""Semi-tensor products and the Kronecker plumbing behind them.

Both STP flavours are computed by materializing the Kronecker factors and
multiplying with the fixed-order kernel, so results are reproducible.
"""

import numpy as np

from . import kernels
from ._checks import Side, as_matrix, as_side, as_vector, check_dim, checked_lcm, checked_prod


def one_vector(k):
    """All-ones vector of length ``k``."""
    return np.ones(check_dim(k, "one-vector length"))


def kron(a, b):
    a = as_matrix(a)
    b = as_matrix(b)
    checked_prod(a.shape[0], b.shape[0])
    checked_prod(a.shape[1], b.shape[1])
    return np.kron(a, b)


def _pad(a, k, side):
    # A ⊗ I_k on the left system, I_k ⊗ A on the right
    if k == 1:
        return a
    eye = np.eye(k)
    return np.kron(a, eye) if side is Side.LEFT else np.kron(eye, a)


def expand(x, k, side=Side.LEFT):
    """Embed ``x`` into ``R^(k*len(x))`` with the one-vector ``1_k``.

    Left: each entry repeated ``k`` times (``x ⊗ 1_k``).
    Right: the vector tiled ``k`` times (``1_k ⊗ x``).
    """
    side = as_side(side)
    checked_prod(len(x), k)
    if k == 1:
        return np.array(x, dtype=np.float64)
    return np.repeat(x, k) if side is Side.LEFT else np.tile(x, k)


def stp_mm(a, b, side=Side.LEFT):
    """Matrix-matrix semi-tensor product.

    With ``t = lcm(cols(a), rows(b))`` the left product is
    ``(a ⊗ I_{t/n})(b ⊗ I_{t/p})`` and the right product is
    ``(I_{t/n} ⊗ a)(I_{t/p} ⊗ b)``. Reduces to ``a @ b`` when the inner
    dimensions agree.
    """
    a = as_matrix(a)
    b = as_matrix(b)
    side = as_side(side)
    n, p = a.shape[1], b.shape[0]
    t = checked_lcm(n, p)
    checked_prod(a.shape[0], t // n)
    checked_prod(b.shape[1], t // p)
    return kernels.matmul(_pad(a, t // n, side), _pad(b, t // p, side))


def stp_mv(a, x, side=Side.LEFT):
    """Matrix-vector semi-tensor product.

    Left: ``(a ⊗ I_{t/n})(x ⊗ 1_{t/p})``; right: ``(I_{t/n} ⊗ a)(1_{t/p} ⊗ x)``
    with ``t = lcm(cols(a), len(x))``. The result has dimension
    ``rows(a) * t / cols(a)``.
    """
    a = as_matrix(a)
    x = as_vector(x)
    side = as_side(side)
    n, p = a.shape[1], x.shape[0]
    t = checked_lcm(n, p)
    checked_prod(a.shape[0], t // n)
    return kernels.matvec(_pad(a, t // n, side), expand(x, t // p, side))
