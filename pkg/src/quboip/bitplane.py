"""Bitplane slicing of gray images and the inverse recombination."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["BitplaneStack", "pixel_to_bits", "slice_bitplanes", "recombine", "msb"]


@dataclass(frozen=True)
class BitplaneStack:
    """B Boolean planes of a gray image, ``planes[b]`` holding bit b (0 = LSB)."""

    planes: np.ndarray  # (B, rows, cols) bool

    def __post_init__(self):
        planes = self.planes
        if isinstance(planes, (list, tuple)):
            shapes = {np.shape(p) for p in planes}
            if len(shapes) > 1:
                raise ValueError(f"bitplanes have mismatched shapes: {sorted(shapes)}")
        planes = np.asarray(planes)
        if planes.ndim != 3 or 0 in planes.shape:
            raise ValueError(f"expected a non-empty (B, rows, cols) stack, got shape {planes.shape}")
        object.__setattr__(self, "planes", planes.astype(bool, copy=False))

    @property
    def depth_bits(self) -> int:
        return self.planes.shape[0]

    @property
    def rows(self) -> int:
        return self.planes.shape[1]

    @property
    def cols(self) -> int:
        return self.planes.shape[2]

    def __len__(self):
        return self.depth_bits

    def __getitem__(self, b) -> np.ndarray:
        return self.planes[b]

    def __iter__(self):
        return iter(self.planes)


def _max_level(depth_bits):
    if depth_bits < 1:
        raise ValueError(f"bit depth must be >= 1, got {depth_bits}")
    return (1 << depth_bits) - 1


def pixel_to_bits(p: int, depth_bits: int = 8) -> list[int]:
    """Binary expansion of one gray level, least significant bit first."""
    top = _max_level(depth_bits)
    if not 0 <= p <= top:
        raise ValueError(f"pixel value {p} outside [0, {top}]")
    p = int(p)
    return [(p >> b) & 1 for b in range(depth_bits)]


def slice_bitplanes(img, depth_bits: int = 8) -> BitplaneStack:
    """Split a gray image into ``depth_bits`` Boolean planes.

    The raw pixel value is decomposed, so ``recombine`` is an exact inverse.
    """
    img = np.asarray(img)
    if img.ndim != 2:
        raise ValueError(f"expected a 2-D gray image, got shape {img.shape}")
    top = _max_level(depth_bits)
    if img.size and (img.min() < 0 or img.max() > top):
        raise ValueError(f"gray levels must lie in [0, {top}] for {depth_bits}-bit depth")
    levels = img.astype(np.int64)
    shifts = np.arange(depth_bits, dtype=np.int64)[:, None, None]
    return BitplaneStack(((levels[None] >> shifts) & 1).astype(bool))


def recombine(stack: BitplaneStack) -> np.ndarray:
    """Weighted sum of the planes, ``sum_b plane_b * 2**b``."""
    planes = stack.planes if isinstance(stack, BitplaneStack) else BitplaneStack(stack).planes
    depth = planes.shape[0]
    weights = (np.int64(1) << np.arange(depth, dtype=np.int64))[:, None, None]
    levels = (planes.astype(np.int64) * weights).sum(axis=0)
    return levels.astype(np.uint8 if depth <= 8 else np.uint16 if depth <= 16 else np.uint64)


def msb(stack: BitplaneStack) -> np.ndarray:
    """The most significant plane, ``stack[B - 1]``."""
    return stack[stack.depth_bits - 1]
