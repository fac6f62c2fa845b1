"""Agreement between two Boolean images (classical vs quantum output)."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .image_io import save_image

__all__ = ["ComparisonReport", "ooie", "error_map", "diff_count", "compare"]


def _pair(a, b):
    a = np.asarray(a).astype(bool)
    b = np.asarray(b).astype(bool)
    if a.shape != b.shape:
        raise ValueError(f"images differ in shape: {a.shape} vs {b.shape}")
    return a, b


def error_map(a, b) -> np.ndarray:
    """Pixelwise XOR."""
    a, b = _pair(a, b)
    return a ^ b


def diff_count(a, b) -> int:
    return int(np.count_nonzero(error_map(a, b)))


def ooie(a, b) -> int:
    """Only One is Enough (OOIE): 0 if the images are identical, 1 if any pixel differs.

    Computed as the OR over all pixels of the pixelwise XOR.
    """
    return int(error_map(a, b).any())


@dataclass(frozen=True, eq=False)
class ComparisonReport:
    ooie: int
    diff_count: int
    error_map: np.ndarray = field(repr=False)
    rows: int
    cols: int

    @property
    def dims(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def to_text(self) -> str:
        return f"ooie={self.ooie}\ndiff_count={self.diff_count}\nrows={self.rows}\ncols={self.cols}\n"

    @staticmethod
    def parse_text(text: str) -> dict[str, int]:
        record = {}
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"malformed report line {line!r}")
            record[key.strip()] = int(value)
        return record

    def write(self, report_path, error_map_path=None) -> None:
        Path(report_path).write_text(self.to_text())
        if error_map_path is not None:
            save_image(self.error_map, error_map_path)


def compare(a, b) -> ComparisonReport:
    emap = error_map(a, b)
    count = int(np.count_nonzero(emap))
    return ComparisonReport(int(count > 0), count, emap, *emap.shape)
