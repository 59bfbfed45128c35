"""Readers and writers for the three signal file formats.

* CSV vector: one number per line, ``#`` starts a comment.
* PGM image: P2 (ASCII) or P5 (binary) greyscale.
* XDH hypermatrix: ``b"XDH1"``, little-endian u32 order ``d``, ``d`` u64
  dims, then the float64 entries in C (last index fastest) order.

Files are recognized by their leading bytes, not their extension.
"""

import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ParseError

CSV_VECTOR = "csv"
PGM_IMAGE = "pgm"
XDH_BINARY = "xdh"

XDH_MAGIC = b"XDH1"


@dataclass
class SignalFile:
    format: str
    payload: np.ndarray
    binary: bool = True  # PGM only: P5 when true, P2 otherwise


def _float(tok, where):
    try:
        v = float(tok)
    except ValueError:
        raise ParseError(f"{where}: not a number: {tok!r}") from None
    if not np.isfinite(v):
        raise ParseError(f"{where}: non-finite value {tok!r}")
    return v


def _strip_comment(line):
    return line.split("#", 1)[0].strip()


def parse_csv_vector(text):
    values = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = _strip_comment(line)
        if line:
            values.append(_float(line, f"line {lineno}"))
    if not values:
        raise ParseError("CSV vector is empty")
    return np.array(values)


def format_csv_vector(x):
    return "".join(f"{float(v)!r}\n" for v in np.asarray(x).reshape(-1))


def parse_csv_matrix(text):
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = _strip_comment(line)
        if line:
            rows.append([_float(tok.strip(), f"line {lineno}") for tok in line.split(",")])
    if not rows:
        raise ParseError("CSV matrix is empty")
    if len({len(r) for r in rows}) != 1:
        raise ParseError("CSV matrix rows have different lengths")
    return np.array(rows)


def _pgm_tokens(data, pos, count):
    out = []
    n = len(data)
    while len(out) < count:
        while pos < n and (data[pos:pos + 1].isspace() or data[pos:pos + 1] == b"#"):
            if data[pos:pos + 1] == b"#":
                while pos < n and data[pos:pos + 1] not in (b"\n", b"\r"):
                    pos += 1
            else:
                pos += 1
        start = pos
        while pos < n and not data[pos:pos + 1].isspace() and data[pos:pos + 1] != b"#":
            pos += 1
        if start == pos:
            raise ParseError("PGM: unexpected end of data")
        out.append(data[start:pos])
    return out, pos


def _pgm_int(tok):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"PGM: bad integer {tok!r}") from None


def parse_pgm(data):
    """Return ``(image, binary)`` for P2/P5 data; pixels come back as floats."""
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise ParseError(f"PGM: unsupported magic {magic!r}")
    header, pos = _pgm_tokens(data, 2, 3)
    width, height, maxval = (_pgm_int(t) for t in header)
    if width < 1 or height < 1:
        raise ParseError(f"PGM: bad size {width}x{height}")
    if not 0 < maxval < 65536:
        raise ParseError(f"PGM: bad maxval {maxval}")
    count = width * height
    if magic == b"P5":
        if pos >= len(data) or not data[pos:pos + 1].isspace():
            raise ParseError("PGM: missing separator before raster")
        pos += 1
        dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
        raster = data[pos:pos + count * dtype.itemsize]
        if len(raster) < count * dtype.itemsize:
            raise ParseError("PGM: raster is truncated")
        pixels = np.frombuffer(raster, dtype=dtype).astype(np.float64)
    else:
        toks, _ = _pgm_tokens(data, pos, count)
        pixels = np.array([_pgm_int(t) for t in toks], dtype=np.float64)
    if pixels.max() > maxval or pixels.min() < 0:
        raise ParseError("PGM: pixel value outside [0, maxval]")
    return pixels.reshape(height, width), magic == b"P5"


def to_pixels(image):
    """Clamp to [0, 255] and round halves away from zero."""
    return np.floor(np.clip(image, 0.0, 255.0) + 0.5).astype(np.uint8)


def format_pgm(image, binary=True):
    image = np.asarray(image)
    if image.ndim != 2:
        raise ValueError(f"PGM holds a matrix, got shape {image.shape}")
    height, width = image.shape
    pixels = to_pixels(image)
    if binary:
        return f"P5\n{width} {height}\n255\n".encode() + pixels.tobytes()
    lines = [f"P2\n{width} {height}\n255"]
    lines += [" ".join(str(int(p)) for p in row) for row in pixels]
    return ("\n".join(lines) + "\n").encode()


def parse_xdh(data):
    if data[:4] != XDH_MAGIC:
        raise ParseError("XDH: bad magic")
    if len(data) < 8:
        raise ParseError("XDH: truncated header")
    (order,) = struct.unpack_from("<I", data, 4)
    if order < 1:
        raise ParseError("XDH: order must be >= 1")
    head = 8 + 8 * order
    if len(data) < head:
        raise ParseError("XDH: truncated dims")
    dims = struct.unpack_from(f"<{order}Q", data, 8)
    if 0 in dims:
        raise ParseError(f"XDH: zero dimension in {dims}")
    count = 1
    for d in dims:
        count *= d
    if len(data) != head + 8 * count:
        raise ParseError(f"XDH: expected {count} values for dims {dims}, got {(len(data) - head) / 8:g}")
    values = np.frombuffer(data, dtype="<f8", offset=head).astype(np.float64)
    if not np.all(np.isfinite(values)):
        raise ParseError("XDH: non-finite value")
    return values.reshape(dims)


def format_xdh(a):
    a = np.ascontiguousarray(a, dtype="<f8")
    if a.ndim == 0:
        a = a.reshape(1)
    header = XDH_MAGIC + struct.pack(f"<I{a.ndim}Q", a.ndim, *a.shape)
    return header + a.tobytes()


def read_signal(path):
    data = Path(path).read_bytes()
    if data[:4] == XDH_MAGIC:
        return SignalFile(XDH_BINARY, parse_xdh(data))
    if data[:2] in (b"P2", b"P5"):
        image, binary = parse_pgm(data)
        return SignalFile(PGM_IMAGE, image, binary)
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise ParseError(f"{path}: not a CSV vector, PGM image or XDH file") from None
    return SignalFile(CSV_VECTOR, parse_csv_vector(text))


def write_signal(path, signal):
    if signal.format == CSV_VECTOR:
        Path(path).write_text(format_csv_vector(signal.payload))
    elif signal.format == PGM_IMAGE:
        Path(path).write_bytes(format_pgm(signal.payload, signal.binary))
    elif signal.format == XDH_BINARY:
        Path(path).write_bytes(format_xdh(signal.payload))
    else:
        raise ValueError(f"unknown format {signal.format!r}")


def read_matrix(path):
    try:
        text = Path(path).read_text()
    except UnicodeDecodeError:
        raise ParseError(f"{path}: not a text file") from None
    return parse_csv_matrix(text)
