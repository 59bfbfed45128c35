"""Compressed-sensing quantities for comparing against projection coding.

``spark`` here is the smallest number of linearly dependent columns, which
is the quantity the sparse-uniqueness result needs. Coherence uses the
absolute normalized inner product.
"""

import math
import warnings
from dataclasses import dataclass
from itertools import combinations, islice

import numpy as np

from . import kernels
from ._checks import Side, as_matrix, as_vector, check_dim
from .errors import CapacityError, DegenerateError
from .stp import stp_mv

SPARK_MAX_COLUMNS = 20
RANK_RTOL = 1e-9
_BATCH = 4096


@dataclass(frozen=True)
class CsSummary:
    spark: float  # an int, or math.inf when all columns are independent
    coherence: float
    sparsity_bound: float
    max_guaranteed_k: float


@dataclass(frozen=True)
class KronInvarianceReport:
    s: int
    spark_a: float | None
    spark_kron: float | None
    coherence_a: float
    coherence_kron: float
    spark_skipped: bool = False

    @property
    def invariant(self):
        spark_ok = self.spark_skipped or self.spark_a == self.spark_kron
        return spark_ok and abs(self.coherence_a - self.coherence_kron) <= 1e-12


def _columns(a):
    a = as_matrix(a)
    zero = np.flatnonzero(~np.any(a != 0.0, axis=0))
    if zero.size:
        raise DegenerateError(f"sensing matrix has zero column(s) at {zero.tolist()}")
    return a


def sensing_matrix(a):
    """Validate a sensing matrix and warn if it is not wider than tall."""
    a = _columns(a)
    if a.shape[0] >= a.shape[1]:
        warnings.warn(f"sensing matrix of shape {a.shape} does not compress", stacklevel=2)
    return a


def _rank(a):
    sv = np.linalg.svd(a, compute_uv=False)
    return int(np.sum(sv > RANK_RTOL * sv[0]))


def _batches(n, k):
    it = combinations(range(n), k)
    while chunk := list(islice(it, _BATCH)):
        yield np.array(chunk)


def _has_dependent_subset(a, k):
    for idx in _batches(a.shape[1], k):
        subs = a[:, idx].transpose(1, 0, 2)
        sv = np.linalg.svd(subs, compute_uv=False)
        rank = np.sum(sv > RANK_RTOL * sv[:, :1], axis=1)
        if np.any(rank < k):
            return True
    return False


def spark(a):
    """Smallest number of linearly dependent columns of ``a``.

    Exhaustive over column subsets, so limited to ``SPARK_MAX_COLUMNS``
    columns. Returns ``math.inf`` when all columns are independent.
    """
    a = _columns(a)
    n = a.shape[1]
    if n > SPARK_MAX_COLUMNS:
        raise CapacityError(f"spark search is limited to {SPARK_MAX_COLUMNS} columns, got {n}")
    r = _rank(a)
    if r == n:
        return math.inf
    # any r + 1 columns are dependent, so the search ends there
    for k in range(2, r + 1):
        if _has_dependent_subset(a, k):
            return k
    return r + 1


def coherence(a):
    """Largest ``|<a_i, a_j>| / (|a_i| |a_j|)`` over distinct columns."""
    a = _columns(a)
    n = a.shape[1]
    if n < 2:
        return 0.0
    norms = np.sqrt(np.array([kernels.dot(c, c) for c in a.T]))
    gram = kernels.matmul(a.T, a)
    cos = np.abs(gram) / np.outer(norms, norms)
    np.fill_diagonal(cos, 0.0)
    return float(min(1.0, cos.max()))


def recovery_bound(a):
    """Spark, coherence and the coherence-based sparsity guarantee.

    Every ``k``-sparse signal with ``k < (1 + 1/mu) / 2`` is recoverable;
    ``max_guaranteed_k`` is the largest such integer.
    """
    mu = coherence(a)
    try:
        sp = spark(a)
    except CapacityError:
        sp = None
    if mu == 0.0:
        bound = k = math.inf
    else:
        bound = 0.5 * (1.0 + 1.0 / mu)
        k = math.ceil(bound) - 1
    return CsSummary(spark=sp, coherence=mu, sparsity_bound=bound, max_guaranteed_k=k)


def stp_measure(a0, x):
    """Sensing with the left matrix-vector STP, ``y = a0 ⋉ x``."""
    return stp_mv(a0, x, Side.LEFT)


def kron_invariance_report(a, s):
    """Spark and coherence of ``a`` next to those of ``a ⊗ I_s``."""
    a = _columns(a)
    s = check_dim(s, "s")
    big = np.kron(a, np.eye(s))
    if a.shape[1] * s > SPARK_MAX_COLUMNS:
        sp_a = sp_big = None
        skipped = True
    else:
        sp_a, sp_big = spark(a), spark(big)
        skipped = False
    return KronInvarianceReport(
        s=s,
        spark_a=sp_a,
        spark_kron=sp_big,
        coherence_a=coherence(a),
        coherence_kron=coherence(big),
        spark_skipped=skipped,
    )


def l0_norm(x, tol=0.0):
    """Number of entries with ``|x_i| > tol``."""
    return int(np.count_nonzero(np.abs(as_vector(x)) > tol))
