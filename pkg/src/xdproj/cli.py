"""Command-line front end.

Exit status: 0 success, 2 usage, 3 unreadable input, 4 shape or dims
problem, 5 numeric capacity or overflow.
"""

import argparse
import math
import sys
import warnings
from dataclasses import replace

from . import __version__
from .codec import CodecSpec, compress_nd, decompress_nd, roundtrip
from .cs_analysis import kron_invariance_report, recovery_bound, sensing_matrix
from .errors import (
    CapacityError,
    DegenerateError,
    DimensionError,
    DimensionOverflowError,
    ParseError,
    ShapeError,
)
from .formats import read_matrix, read_signal, write_signal

EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_SHAPE = 4
EXIT_CAPACITY = 5


def _dims(text):
    try:
        dims = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if any(d < 1 for d in dims):
        raise argparse.ArgumentTypeError(f"dimensions must be >= 1, got {text!r}")
    return dims


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _fmt(v):
    if v is None:
        return "skipped"
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return repr(v) if isinstance(v, float) else str(v)


def _g(v):
    return "inf" if math.isinf(v) else f"{v:.7g}"


def _spec_for(shape, dims, side, compressing=True):
    if len(dims) != len(shape):
        raise ShapeError(f"payload has {len(shape)} axes but {len(dims)} dims were given")
    if compressing:
        return CodecSpec(tuple(shape), dims, side)
    return CodecSpec(dims, tuple(shape), side)


def cmd_compress(args):
    sig = read_signal(args.input)
    spec = _spec_for(sig.payload.shape, args.target_dims, args.side)
    write_signal(args.output, replace(sig, payload=compress_nd(sig.payload, spec)))
    print(f"compression_ratio={_fmt(spec.compression_ratio)}")
    return 0


def cmd_decompress(args):
    sig = read_signal(args.input)
    spec = _spec_for(sig.payload.shape, args.source_dims, args.side, compressing=False)
    write_signal(args.output, replace(sig, payload=decompress_nd(sig.payload, spec)))
    return 0


def cmd_roundtrip(args):
    sig = read_signal(args.input)
    spec = _spec_for(sig.payload.shape, args.target_dims, args.side)
    _, _, report = roundtrip(sig.payload, spec)
    block = "".join(f"{k}={_fmt(v)}\n" for k, v in report.items())
    sys.stdout.write(block)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(block)
    return 0


def cmd_analyze(args):
    a = read_matrix(args.matrix)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        a = sensing_matrix(a)
    for w in caught:
        print(f"xdproj: warning: {w.message}", file=sys.stderr)
    summary = recovery_bound(a)
    lines = [
        f"spark={_fmt(summary.spark)}",
        f"coherence={_g(summary.coherence)}",
        f"sparsity_bound={_g(summary.sparsity_bound)}",
        f"max_guaranteed_k={_fmt(summary.max_guaranteed_k)}",
    ]
    if args.kron_s is not None:
        rep = kron_invariance_report(a, args.kron_s)
        lines += [
            f"kron_s={rep.s}",
            f"spark_kron={_fmt(rep.spark_kron)}",
            f"coherence_kron={_g(rep.coherence_kron)}",
            f"kron_invariant={'true' if rep.invariant else 'false'}",
        ]
    print("\n".join(lines))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="xdproj", description="Cross-dimensional projection signal codec.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def side(sp):
        sp.add_argument("--side", choices=["left", "right"], default="left")

    c = sub.add_parser("compress", help="project a signal onto smaller dims")
    c.add_argument("input")
    c.add_argument("output")
    c.add_argument("--target-dims", type=_dims, required=True, metavar="D1,...,Dk")
    side(c)
    c.set_defaults(func=cmd_compress)

    d = sub.add_parser("decompress", help="project a compressed signal back onto its source dims")
    d.add_argument("input")
    d.add_argument("output")
    d.add_argument("--source-dims", type=_dims, required=True, metavar="D1,...,Dk")
    side(d)
    d.set_defaults(func=cmd_decompress)

    r = sub.add_parser("roundtrip", help="compress, decompress and report the error")
    r.add_argument("input")
    r.add_argument("--target-dims", type=_dims, required=True, metavar="D1,...,Dk")
    r.add_argument("--report", metavar="PATH", help="also write the key=value block here")
    side(r)
    r.set_defaults(func=cmd_roundtrip)

    a = sub.add_parser("analyze", help="spark, coherence and sparsity bound of a sensing matrix")
    a.add_argument("matrix", help="CSV file, one comma-separated row per line")
    a.add_argument("--kron-s", type=_positive, metavar="S", help="also compare against A ⊗ I_S")
    a.set_defaults(func=cmd_analyze)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as e:
        code = EXIT_PARSE
        msg = e
    except (ShapeError, DimensionError, DegenerateError) as e:
        code = EXIT_SHAPE
        msg = e
    except (DimensionOverflowError, CapacityError, MemoryError) as e:
        code = EXIT_CAPACITY
        msg = e or "out of memory"
    print(f"xdproj: error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
