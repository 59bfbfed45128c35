import numpy as np
import pytest

from xdproj import (
    CodecSpec,
    DimensionError,
    ShapeError,
    Side,
    compress_1d,
    compress_2d,
    compress_nd,
    compress_nd_kron,
    decompress_1d,
    decompress_2d,
    decompress_nd,
    decompress_nd_kron,
    expand,
    projector,
    roundtrip,
    staged_kron_operator,
    vectorize,
    xdist,
)


def test_compress_1d_examples():
    assert compress_1d([1, 2, 3, 4], 2).tolist() == [1.5, 3.5]
    assert compress_1d([5], 1).tolist() == [5.0]
    np.testing.assert_allclose(compress_1d([1, 2, 3], 2), [4 / 3, 8 / 3], rtol=1e-15)


def test_decompress_1d_examples():
    assert decompress_1d([1.5, 3.5], 4).tolist() == [1.5, 1.5, 3.5, 3.5]
    assert decompress_1d([2.5], 2).tolist() == [2.5, 2.5]
    assert decompress_1d([-0.25, 7.0], 2).tolist() == [-0.25, 7.0]


def test_compress_2d_examples():
    a = np.array([[1.0, 2.0], [3.0, 4.0]])
    assert compress_2d(a, 1, 1).tolist() == [[2.5]]
    assert np.array_equal(compress_2d(a, 2, 2), a)
    assert compress_2d(a, 1, 2).tolist() == [[2.0, 3.0]]


def test_decompress_2d_examples():
    assert decompress_2d([[2.5]], 2, 2).tolist() == [[2.5, 2.5], [2.5, 2.5]]
    b = np.array([[1.0, -2.0], [0.5, 9.0]])
    assert np.array_equal(decompress_2d(b, 2, 2), b)
    assert decompress_2d([[2.0, 3.0]], 2, 2).tolist() == [[2.0, 3.0], [2.0, 3.0]]


def test_compress_2d_is_the_matrix_sandwich(rng):
    for _ in range(30):
        a = rng.normal(size=(3, 4))
        for side in Side:
            expected = projector(3, 2, side).matrix @ a @ projector(4, 3, side).matrix.T
            assert np.max(np.abs(compress_2d(a, 2, 3, side) - expected)) <= 1e-12
            spec = CodecSpec((3, 4), (2, 3), side)
            assert np.max(np.abs(compress_nd(a, spec) - compress_2d(a, 2, 3, side))) <= 1e-12
            b = rng.normal(size=(2, 3))
            assert np.max(np.abs(decompress_nd(b, spec) - decompress_2d(b, 3, 4, side))) <= 1e-12


def cube():
    return np.arange(1.0, 9.0).reshape(2, 2, 2)


def test_compress_nd_examples():
    spec = CodecSpec((2, 2, 2), (2, 2, 1))
    b = compress_nd(cube(), spec)
    assert b.shape == (2, 2, 1) and vectorize(b).tolist() == [1.5, 3.5, 5.5, 7.5]
    assert np.array_equal(compress_nd(cube(), CodecSpec((2, 2, 2), (2, 2, 2))), cube())


def test_decompress_nd_examples():
    spec = CodecSpec((2, 2, 2), (2, 2, 1))
    out = decompress_nd(np.array([1.5, 3.5, 5.5, 7.5]).reshape(2, 2, 1), spec)
    assert vectorize(out).tolist() == [1.5, 1.5, 3.5, 3.5, 5.5, 5.5, 7.5, 7.5]
    assert decompress_nd([[2.5]], CodecSpec((2, 2), (1, 1))).tolist() == [[2.5, 2.5], [2.5, 2.5]]


def test_spec_validation():
    with pytest.raises(ShapeError):
        CodecSpec((2, 2), (1,))
    with pytest.raises(DimensionError):
        CodecSpec((2, 0), (1, 1))
    with pytest.raises(ShapeError):
        compress_nd(cube(), CodecSpec((2, 2), (1, 1)))
    with pytest.raises(ShapeError):
        decompress_nd(cube(), CodecSpec((2, 2, 2), (1, 1, 1)))
    assert CodecSpec([4], [2], "right").side is Side.RIGHT


def test_path_equivalence(rng):
    for _ in range(60):
        d = int(rng.integers(1, 5))
        src = tuple(int(v) for v in rng.integers(1, 6, size=d))
        dst = tuple(int(v) for v in rng.integers(1, 6, size=d))
        a = rng.normal(size=src)
        for side in Side:
            spec = CodecSpec(src, dst, side)
            b = compress_nd(a, spec)
            assert np.max(np.abs(b - compress_nd_kron(a, spec))) <= 1e-12
            assert np.max(np.abs(staged_kron_operator(src, dst, side) @ a.ravel() - b.ravel())) <= 1e-12
            assert np.max(np.abs(decompress_nd(b, spec) - decompress_nd_kron(b, spec))) <= 1e-12


def test_best_compression_against_candidates(rng):
    for _ in range(50):
        n, m = int(rng.integers(2, 10)), int(rng.integers(1, 10))
        x = rng.normal(size=n)
        for side in Side:
            y = compress_1d(x, m, side)
            for cand in rng.normal(size=(50, m)):
                assert xdist(x, cand, side) >= xdist(x, y, side) - 1e-12
            x_hat = decompress_1d(y, n, side)
            for cand in rng.normal(size=(50, n)):
                assert xdist(y, cand, side) >= xdist(y, x_hat, side) - 1e-12


def test_double_compression_is_idempotent(rng):
    for _ in range(30):
        spec = CodecSpec((6, 5), (4, 3))
        b = compress_nd(rng.normal(size=(6, 5)), spec)
        assert np.array_equal(compress_nd(b, CodecSpec((4, 3), (4, 3))), b)


def test_roundtrip_examples():
    _, x_hat, rep = roundtrip(np.array([1.0, 2, 3, 4]), CodecSpec((4,), (2,)))
    assert x_hat.tolist() == [1.5, 1.5, 3.5, 3.5]
    assert rep.l2_error == 1.0 and rep.rmse == 0.5 and rep.dv_error == 0.5
    assert rep.compression_ratio == 0.5
    z = np.array([3.0, -1.0, 2.0])
    assert roundtrip(expand(z, 2, "left"), CodecSpec((6,), (3,)))[2].l2_error == 0.0
    assert roundtrip(z, CodecSpec((3,), (3,)))[2].l2_error == 0.0
    assert [k for k, _ in rep.items()] == ["l2_error", "rmse", "dv_error", "compression_ratio"]


def test_lossless_on_block_structured_hypermatrix(rng):
    for _ in range(30):
        core = rng.normal(size=tuple(int(v) for v in rng.integers(1, 4, size=3)))
        blocks = tuple(int(v) for v in rng.integers(1, 4, size=3))
        a = core
        for axis, b in enumerate(blocks):
            a = np.repeat(a, b, axis=axis)
        spec = CodecSpec(a.shape, core.shape)
        b, a_hat, rep = roundtrip(a, spec)
        assert np.max(np.abs(b - core)) <= 1e-12
        assert rep.l2_error <= 1e-12


def test_report_fields_consistent(rng):
    for _ in range(20):
        a = rng.normal(size=(5, 7))
        _, _, rep = roundtrip(a, CodecSpec((5, 7), (2, 3), "right"))
        assert rep.rmse == pytest.approx(rep.l2_error / np.sqrt(35), rel=1e-15)
        assert rep.dv_error == pytest.approx(rep.rmse, rel=1e-12)
        assert rep.compression_ratio == 6 / 35
