"""Netpbm reading/writing and color-to-gray conversion.

Images are plain numpy arrays:

* Boolean image (one bitplane): 2-D ``bool`` array.
* Gray image: 2-D unsigned integer array (``uint8`` for 8-bit depth).
* Color image: ``(rows, cols, 3)`` ``uint8`` array.

Supported formats are PBM (P1/P4), PGM (P2/P5) and PPM (P3/P6) with
maxval 255. Pixel order is row-major with a top-left origin.
"""

from __future__ import annotations

import os
import re

import numpy as np

__all__ = [
    "NetpbmError",
    "load_image",
    "save_image",
    "to_gray",
    "LUMA_WEIGHTS",
]

# ITU-R BT.601 luma, as used by MATLAB's rgb2gray.
LUMA_WEIGHTS = (0.2989, 0.5870, 0.1140)

_MAXVAL = 255
_WHITESPACE = b" \t\n\r\v\f"


class NetpbmError(ValueError):
    """Malformed or unsupported Netpbm data.

    ``offset`` is the byte position in the file where decoding failed.
    """

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def _skip_space_and_comments(self):
        data = self.data
        while self.pos < len(data):
            ch = data[self.pos : self.pos + 1]
            if ch in _WHITESPACE and ch:
                self.pos += 1
            elif ch == b"#":
                end = data.find(b"\n", self.pos)
                self.pos = len(data) if end < 0 else end + 1
            else:
                break

    def header_int(self, what):
        self._skip_space_and_comments()
        m = re.compile(rb"\d+").match(self.data, self.pos)
        if m is None:
            raise NetpbmError(f"expected {what}", self.pos)
        self.pos = m.end()
        return int(m.group())

    def ascii_values(self, count, what, single_digit=False):
        values = np.empty(count, dtype=np.int64)
        pattern = re.compile(rb"[01]" if single_digit else rb"\d+")
        for i in range(count):
            self._skip_space_and_comments()
            m = pattern.match(self.data, self.pos)
            if m is None:
                if self.pos >= len(self.data):
                    raise NetpbmError(f"truncated {what}: got {i} of {count} values", self.pos)
                raise NetpbmError(f"invalid {what} value", self.pos)
            values[i] = int(m.group())
            self.pos = m.end()
        return values

    def raw(self, nbytes, what):
        # exactly one whitespace byte separates the header from a raw raster
        if self.pos >= len(self.data) or self.data[self.pos : self.pos + 1] not in _WHITESPACE:
            raise NetpbmError(f"missing whitespace before {what}", self.pos)
        start = self.pos + 1
        chunk = self.data[start : start + nbytes]
        if len(chunk) < nbytes:
            raise NetpbmError(
                f"truncated {what}: expected {nbytes} bytes, got {len(chunk)}", start + len(chunk)
            )
        self.pos = start + nbytes
        return np.frombuffer(chunk, dtype=np.uint8)


def _check_maxval(reader):
    offset = reader.pos
    maxval = reader.header_int("maxval")
    if maxval != _MAXVAL:
        raise NetpbmError(f"unsupported maxval {maxval}, only {_MAXVAL} is accepted", offset)


def _check_range(values, offset):
    if values.size and values.max() > _MAXVAL:
        raise NetpbmError(f"sample exceeds maxval {_MAXVAL}", offset)


def decode_netpbm(data: bytes) -> np.ndarray:
    """Decode an in-memory Netpbm file."""
    magic = data[:2]
    if len(magic) < 2 or magic[:1] != b"P" or magic[1:2] not in b"123456":
        raise NetpbmError(f"unsupported magic number {magic!r}", 0)
    kind = int(magic[1:2])
    reader = _Reader(data)
    reader.pos = 2
    cols = reader.header_int("width")
    rows = reader.header_int("height")
    if rows < 1 or cols < 1:
        raise NetpbmError(f"invalid dimensions {cols}x{rows}", reader.pos)

    if kind == 1:
        bits = reader.ascii_values(rows * cols, "bitmap", single_digit=True)
        return bits.reshape(rows, cols).astype(bool)
    if kind == 4:
        stride = (cols + 7) // 8
        packed = reader.raw(rows * stride, "bitmap").reshape(rows, stride)
        return np.unpackbits(packed, axis=1)[:, :cols].astype(bool)

    _check_maxval(reader)
    channels = 3 if kind in (3, 6) else 1
    count = rows * cols * channels
    offset = reader.pos
    if kind in (2, 3):
        values = reader.ascii_values(count, "raster")
        _check_range(values, offset)
        values = values.astype(np.uint8)
    else:
        values = reader.raw(count, "raster").copy()
    shape = (rows, cols, 3) if channels == 3 else (rows, cols)
    return values.reshape(shape)


def load_image(path) -> np.ndarray:
    """Read a PBM, PGM or PPM file.

    Returns a ``bool`` array for PBM, a 2-D ``uint8`` array for PGM and a
    ``(rows, cols, 3)`` ``uint8`` array for PPM. Raises ``OSError`` if the
    file cannot be read and :class:`NetpbmError` on malformed content.
    """
    with open(path, "rb") as fh:
        data = fh.read()
    return decode_netpbm(data)


def encode_netpbm(img, format=None) -> bytes:
    """Encode a Boolean or gray image; see :func:`save_image`."""
    img = np.asarray(img)
    if img.ndim != 2 or img.shape[0] < 1 or img.shape[1] < 1:
        raise ValueError(f"expected a non-empty 2-D image, got shape {img.shape}")
    if format is None:
        format = "P4" if img.dtype == bool else "P5"
    format = format.upper()
    rows, cols = img.shape
    header = f"{format}\n{cols} {rows}\n".encode("ascii")

    if format in ("P1", "P4"):
        if img.dtype != bool:
            if not np.isin(img, (0, 1)).all():
                raise ValueError("PBM output requires a Boolean image")
            img = img.astype(bool)
        if format == "P1":
            lines = [" ".join("1" if v else "0" for v in row) for row in img]
            return header + ("\n".join(lines) + "\n").encode("ascii")
        return header + np.packbits(img, axis=1).tobytes()

    if format in ("P2", "P5"):
        if img.dtype == bool:
            img = img.astype(np.uint8) * _MAXVAL
        if img.min() < 0 or img.max() > _MAXVAL:
            raise ValueError(f"PGM output requires pixels in [0, {_MAXVAL}]")
        img = img.astype(np.uint8)
        header += f"{_MAXVAL}\n".encode("ascii")
        if format == "P2":
            lines = [" ".join(str(int(v)) for v in row) for row in img]
            return header + ("\n".join(lines) + "\n").encode("ascii")
        return header + img.tobytes()

    raise ValueError(f"unsupported output format {format!r}; use P1, P2, P4 or P5")


def save_image(img, path, format=None) -> None:
    """Write a Boolean image as PBM or a gray image as PGM.

    ``format`` is one of ``"P1"``/``"P4"`` (PBM, plain/raw) or
    ``"P2"``/``"P5"`` (PGM, plain/raw). By default Boolean arrays are
    written as P4 and everything else as P5.
    """
    payload = encode_netpbm(img, format)
    try:
        with open(path, "wb") as fh:
            fh.write(payload)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write image: {exc.strerror}", os.fspath(path)) from exc


def to_gray(img) -> np.ndarray:
    """Convert an RGB image to 8-bit gray with BT.601 luma weights.

    Each pixel becomes ``round(0.2989 r + 0.5870 g + 0.1140 b)`` with
    halves rounded up, clamped to [0, 255].
    """
    img = np.asarray(img)
    if img.ndim != 3 or img.shape[2] != 3:
        raise ValueError(f"expected a (rows, cols, 3) color image, got shape {img.shape}")
    if img.min() < 0 or img.max() > 255:
        raise ValueError("color channels must lie in [0, 255]")
    rgb = img.astype(np.float64)
    wr, wg, wb = LUMA_WEIGHTS
    luma = wr * rgb[..., 0] + wg * rgb[..., 1] + wb * rgb[..., 2]
    return np.clip(np.floor(luma + 0.5), 0, 255).astype(np.uint8)
