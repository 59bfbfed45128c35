#!/usr/bin/env python3
"""Time the compiled kernels against the numpy fallback.

Each row runs the same inputs through both backends, checks that the
outputs are bit-identical and prints the speedup.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from xdproj import CodecSpec, _pykernels, compress_nd, kernels

try:
    from xdproj import _ckernels
except ImportError:
    _ckernels = None


def cases(rng):
    a, b = rng.normal(size=(200, 300)), rng.normal(size=(300, 150))
    yield "matmul 200x300 @ 300x150", lambda k: k.matmul(a, b)

    proj = rng.normal(size=(96, 256))
    vol = rng.normal(size=(64, 256, 32))
    yield "apply_axis (64,256,32) axis 1 -> 96", lambda k: k.apply_axis(vol, proj)

    thin = rng.normal(size=(3, 512))
    slab = rng.normal(size=(512, 512, 1))
    yield "apply_axis (512,512,1) axis 1 -> 3", lambda k: k.apply_axis(slab, thin)

    x, y = rng.normal(size=1_000_000), rng.normal(size=1_000_000)
    yield "dot 1e6", lambda k: k.dot(x, y)

    img = rng.normal(size=(120, 90, 30))
    spec = CodecSpec(img.shape, (45, 40, 12))

    def codec(k):
        saved = kernels._impl
        kernels._impl = k
        try:
            return compress_nd(img, spec)
        finally:
            kernels._impl = saved

    yield "compress_nd (120,90,30) -> (45,40,12)", codec


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")

    rng = np.random.default_rng(0)
    print(f"{'case':42s} {'numpy ms':>10s} {'cython ms':>10s} {'speedup':>8s}  identical")
    for name, fn in cases(rng):
        same = np.array_equal(fn(_pykernels), fn(_ckernels))
        t_py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat)) * 1e3
        t_c = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:42s} {t_py:10.2f} {t_c:10.2f} {t_py / t_c:7.1f}x  {same}")


if __name__ == "__main__":
    main()
