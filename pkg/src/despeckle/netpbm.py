"""Netpbm (PGM/PPM) file I/O.

Supports the four classic raster formats: P2/P5 grayscale and P3/P6 color,
with maxval up to 65535 (two-byte big-endian samples above 255) and ``#``
comments anywhere in the header.  Saving clamps to ``[0, range_max]`` and
rounds half-to-even, so a save/load round trip of integer-valued in-range
data is bit-exact.
"""

from __future__ import annotations

import os

import numpy as np

from .grid import ColorImage, ImageGrid


class NetpbmError(ValueError):
    """Malformed header, truncated pixel data, or unsupported magic number."""


def load_pgm(path) -> ImageGrid:
    """Read a P2 (ASCII) or P5 (binary) grayscale file."""
    samples, maxval, (h, w) = _load(path, {b"P2": False, b"P5": True}, channels=1)
    return ImageGrid(samples.reshape(h, w), range_max=float(maxval))


def load_ppm(path) -> ColorImage:
    """Read a P3 (ASCII) or P6 (binary) color file."""
    samples, maxval, (h, w) = _load(path, {b"P3": False, b"P6": True}, channels=3)
    planes = samples.reshape(h, w, 3)
    rng = float(maxval)
    return ColorImage(
        ImageGrid(planes[:, :, 0], rng),
        ImageGrid(planes[:, :, 1], rng),
        ImageGrid(planes[:, :, 2], rng),
    )


def save_pgm(image: ImageGrid, path) -> None:
    """Write a binary P5 file; values clamped to [0, range_max], rounded half-to-even."""
    _save(path, b"P5", _quantize(image), image.range_max)


def save_ppm(image: ColorImage, path) -> None:
    """Write a binary P6 file with interleaved RGB samples."""
    planes = np.stack([_quantize(c) for c in image.channels()], axis=-1)
    _save(path, b"P6", planes, image.range_max)


def _quantize(image: ImageGrid) -> np.ndarray:
    clamped = np.clip(image.data, 0.0, image.range_max)
    return np.rint(clamped)


def _save(path, magic: bytes, samples: np.ndarray, range_max: float) -> None:
    maxval = int(min(max(np.rint(range_max), 1), 65535))
    dtype = ">u2" if maxval > 255 else "u1"
    h, w = samples.shape[:2]
    header = b"%s\n%d %d\n%d\n" % (magic, w, h, maxval)
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(samples.astype(dtype).tobytes())


class _Tokenizer:
    """Whitespace/comment-aware scanner over the raw file bytes."""

    def __init__(self, data: bytes) -> None:
        self.data = data
        self.pos = 0

    def skip_separators(self) -> None:
        data, n = self.data, len(self.data)
        while self.pos < n:
            c = data[self.pos]
            if c in b" \t\r\n\x0b\x0c":
                self.pos += 1
            elif c == ord("#"):
                nl = data.find(b"\n", self.pos)
                self.pos = n if nl < 0 else nl + 1
            else:
                return

    def token(self) -> bytes:
        self.skip_separators()
        start = self.pos
        data, n = self.data, len(self.data)
        while self.pos < n and data[self.pos] not in b" \t\r\n\x0b\x0c#":
            self.pos += 1
        if self.pos == start:
            raise NetpbmError("malformed header: unexpected end of file")
        return data[start : self.pos]

    def int_token(self, what: str) -> int:
        tok = self.token()
        try:
            return int(tok)
        except ValueError:
            raise NetpbmError(f"malformed header: bad {what} {tok!r}") from None


def _load(path, magics: dict, channels: int):
    if not os.path.exists(path):
        raise FileNotFoundError(path)
    with open(path, "rb") as fh:
        data = fh.read()

    scan = _Tokenizer(data)
    try:
        magic = scan.token()
    except NetpbmError:
        raise NetpbmError("malformed header: empty file") from None
    if magic not in magics:
        wanted = "/".join(m.decode() for m in magics)
        raise NetpbmError(f"unsupported magic number {magic!r}, expected {wanted}")
    binary = magics[magic]

    w = scan.int_token("width")
    h = scan.int_token("height")
    maxval = scan.int_token("maxval")
    if w < 1 or h < 1:
        raise NetpbmError(f"malformed header: bad dimensions {w}x{h}")
    if not 1 <= maxval <= 65535:
        raise NetpbmError(f"malformed header: maxval {maxval} outside [1, 65535]")

    count = w * h * channels
    if binary:
        # Exactly one whitespace byte separates the maxval from the raster.
        if scan.pos >= len(data) or data[scan.pos] not in b" \t\r\n\x0b\x0c":
            raise NetpbmError("malformed header: missing separator before raster")
        start = scan.pos + 1
        dtype = ">u2" if maxval > 255 else "u1"
        width_bytes = 2 if maxval > 255 else 1
        if len(data) - start < count * width_bytes:
            raise NetpbmError(
                f"truncated pixel data: expected {count * width_bytes} bytes, "
                f"got {len(data) - start}"
            )
        samples = np.frombuffer(data, dtype=dtype, count=count, offset=start)
    else:
        values = []
        try:
            for _ in range(count):
                values.append(scan.int_token("sample"))
        except NetpbmError:
            raise NetpbmError(
                f"truncated pixel data: expected {count} samples, got {len(values)}"
            ) from None
        samples = np.asarray(values, dtype=np.float64)

    return samples.astype(np.float64), maxval, (h, w)
