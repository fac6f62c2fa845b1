"""End-to-end experiment: image -> bitplane -> classical and quantum edges -> comparison."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .bitplane import slice_bitplanes
from .edge import WINDOW_MODES, KernelSpec, bed_classical, bed_quantum, inject_noise
from .image_io import load_image, save_image, to_gray
from .interfaces import c2q_image, q2c_mode1
from .metrics import ComparisonReport, compare

__all__ = ["BACKENDS", "PipelineConfig", "PipelineResult", "prepare_gray", "select_plane", "run_pipeline"]

log = logging.getLogger(__name__)

BACKENDS = ("classical", "quantum", "both")


@dataclass(frozen=True)
class PipelineConfig:
    input: Path
    out_dir: Path
    bitplane: int | None = None  # None selects the MSB
    kernel_size: int = 3
    passes: int = 1
    window_mode: str = "prose"
    backend: str = "both"
    noise_flip_prob: float = 0.0
    seed: int = 0
    emit_bitplanes: bool = False
    emit_error_map: bool = False
    emit_report: bool = True

    def __post_init__(self):
        object.__setattr__(self, "input", Path(self.input))
        object.__setattr__(self, "out_dir", Path(self.out_dir))
        if self.backend not in BACKENDS:
            raise ValueError(f"backend must be one of {BACKENDS}, got {self.backend!r}")
        if self.window_mode not in WINDOW_MODES:
            raise ValueError(f"window_mode must be one of {WINDOW_MODES}, got {self.window_mode!r}")
        if not 0.0 <= self.noise_flip_prob <= 1.0:
            raise ValueError(f"noise flip probability must lie in [0, 1], got {self.noise_flip_prob}")
        self.kernel  # validates width and passes

    @property
    def kernel(self) -> KernelSpec:
        return KernelSpec(self.kernel_size, self.passes, self.window_mode)


@dataclass
class PipelineResult:
    plane: np.ndarray
    classical: np.ndarray | None = None
    quantum: np.ndarray | None = None
    report: ComparisonReport | None = None
    files: dict[str, Path] = field(default_factory=dict)


def prepare_gray(img) -> tuple[np.ndarray, int]:
    """Reduce a loaded image to (gray levels, bit depth).

    Color images go through the luma conversion; Boolean images count as
    one-bit gray images.
    """
    img = np.asarray(img)
    if img.dtype == bool:
        return img.astype(np.uint8), 1
    if img.ndim == 3:
        return to_gray(img), 8
    return img, 8


def select_plane(gray, depth_bits, bitplane=None):
    index = depth_bits - 1 if bitplane is None else bitplane
    if not 0 <= index < depth_bits:
        raise ValueError(f"bitplane index {index} outside [0, {depth_bits - 1}]")
    return slice_bitplanes(gray, depth_bits), index


def quantum_edges(plane, kernel: KernelSpec, noise_flip_prob=0.0, seed=0) -> np.ndarray:
    """c2q -> noise -> PAO detector -> Mode I readout, for one Boolean plane."""
    lattice = inject_noise(c2q_image(plane), noise_flip_prob, seed)
    return q2c_mode1(bed_quantum(lattice, kernel), 1)


def run_pipeline(cfg: PipelineConfig) -> PipelineResult:
    stack, index = select_plane(*prepare_gray(load_image(cfg.input)), cfg.bitplane)
    plane = stack[index]
    result = PipelineResult(plane=plane)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)

    def emit(name, img):
        path = cfg.out_dir / name
        save_image(img, path)
        result.files[name] = path

    if cfg.emit_bitplanes:
        for b, p in enumerate(stack):
            emit(f"plane{b}.pbm", p)

    kernel = cfg.kernel
    if cfg.backend in ("classical", "both"):
        result.classical = bed_classical(plane, kernel)
        emit("edge_classical.pbm", result.classical)
    if cfg.backend in ("quantum", "both"):
        result.quantum = quantum_edges(plane, kernel, cfg.noise_flip_prob, cfg.seed)
        emit("edge_quantum.pbm", result.quantum)

    if cfg.backend == "both":
        result.report = compare(result.classical, result.quantum)
        log.info("ooie=%d diff_count=%d", result.report.ooie, result.report.diff_count)
        if cfg.emit_report:
            path = cfg.out_dir / "report.txt"
            path.write_text(result.report.to_text())
            result.files["report.txt"] = path
        if cfg.emit_error_map:
            emit("error_map.pbm", result.report.error_map)
    return result
