import itertools
import math
import threading

import numpy as np
import pytest

from xdproj import ShapeError, Side, expand, project, projector, projector_definition, xdist, xinner, xnorm, xsub

import oracles


def kron_formula(m, n, side):
    """Projector straight from its Kronecker formula, using the list oracle."""
    t = math.lcm(m, n)
    jn = [[1.0] * (t // n)]
    jm = oracles.ones_col(t // m)
    if side == "left":
        left, right = oracles.kron(oracles.eye(n), jn), oracles.kron(oracles.eye(m), jm)
    else:
        left, right = oracles.kron(jn, oracles.eye(n)), oracles.kron(jm, oracles.eye(m))
    return (n / t) * np.array(oracles.matmul(left, right))


@pytest.mark.parametrize(
    "m, n, expected",
    [
        (2, 1, [[0.5, 0.5]]),
        (1, 2, [[1.0], [1.0]]),
        (2, 3, [[1.0, 0.0], [0.5, 0.5], [0.0, 1.0]]),
    ],
)
def test_projector_examples(m, n, expected):
    np.testing.assert_allclose(kron_formula(m, n, "left"), expected, atol=1e-15)
    assert projector(m, n, "left").matrix.tolist() == expected


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_same_dimension_is_identity(n):
    for side in Side:
        assert np.array_equal(projector(n, n, side).matrix, np.eye(n))


def test_closed_form_matches_kronecker_formula():
    for m, n in itertools.product(range(1, 13), repeat=2):
        for side in ("left", "right"):
            p = projector(m, n, side).matrix
            assert p.shape == (n, m)
            assert np.max(np.abs(p - kron_formula(m, n, side))) <= 1e-12
            assert np.max(np.abs(p - projector_definition(m, n, side))) <= 1e-12
            assert np.all(np.abs(p.sum(axis=1) - 1.0) <= 1e-12)
            assert np.all((p >= 0) & (p <= 1))


def test_projector_metadata_and_readonly():
    p = projector(4, 6, "right")
    assert (p.from_dim, p.to_dim, p.side) == (4, 6, Side.RIGHT)
    with pytest.raises(ValueError):
        p.matrix[0, 0] = 3.0
    with pytest.raises(ShapeError):
        p(np.ones(5))


def test_projector_cache_under_threads():
    results = []

    def work():
        results.append([projector(m, n, s).matrix.copy() for m in range(1, 9) for n in range(1, 9) for s in Side])

    threads = [threading.Thread(target=work) for _ in range(8)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    for r in results[1:]:
        assert all(np.array_equal(a, b) for a, b in zip(r, results[0]))


def golden_min(f, lo, hi, iters=200):
    g = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    for _ in range(iters):
        c, d = b - g * (b - a), a + g * (b - a)
        if f(c) < f(d):
            b = d
        else:
            a = c
    return (a + b) / 2


def test_project_examples():
    assert project([1, 2], 1).tolist() == [1.5]
    assert golden_min(lambda v: oracles.xdist([v], [1, 2], "left"), -10, 10) == pytest.approx(1.5, abs=1e-8)
    assert project([1, 2], 3).tolist() == [1.0, 1.5, 2.0]
    np.testing.assert_allclose(project([1, 2, 3], 2, "left"), [4 / 3, 8 / 3], rtol=1e-15)
    # least squares on the R^6 embedding: minimize |(I_2 ⊗ 1_3) y - (x ⊗ 1_2)|
    emb = np.kron(np.eye(2), np.ones((3, 1)))
    y_ls = np.linalg.lstsq(emb, np.repeat([1.0, 2, 3], 2), rcond=None)[0]
    np.testing.assert_allclose(y_ls, [4 / 3, 8 / 3], rtol=1e-12)


def test_optimality_against_perturbations(rng):
    for _ in range(40):
        m, n = int(rng.integers(2, 10)), int(rng.integers(1, 10))
        x = rng.normal(size=m)
        for side in Side:
            y0 = project(x, n, side)
            best = xdist(x, y0, side)
            for delta in rng.uniform(-1, 1, size=(100, n)):
                assert xdist(x, y0 + delta, side) >= best - 1e-12


def test_residual_orthogonal_to_target_space(rng):
    for _ in range(50):
        m, n = int(rng.integers(1, 10)), int(rng.integers(1, 10))
        x = rng.normal(size=m)
        for side in Side:
            r = xsub(x, project(x, n, side), side)
            for y in rng.normal(size=(100, n)):
                assert abs(xinner(r, y, side)) <= 1e-9 * xnorm(x) * xnorm(y)


def test_lossless_on_embedded_class(rng):
    for _ in range(50):
        z = rng.normal(size=rng.integers(1, 6))
        b = int(rng.integers(1, 5))
        assert np.max(np.abs(project(expand(z, b, "left"), z.size, "left") - z)) <= 1e-12
        assert np.max(np.abs(project(expand(z, b, "right"), z.size, "right") - z)) <= 1e-12


def test_projection_respects_equivalence(rng):
    for _ in range(50):
        x = rng.normal(size=rng.integers(1, 6))
        n, k = int(rng.integers(1, 8)), int(rng.integers(2, 4))
        for side in Side:
            assert np.max(np.abs(project(x, n, side) - project(expand(x, k, side), n, side))) <= 1e-12
