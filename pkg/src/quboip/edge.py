"""Boolean edge detector and its PAO (quantum) counterpart.

For every pixel the detector ORs the neighbours inside a w x w window and
XORs the result with the pixel itself. Two readings of "neighbours" are
offered through ``window_mode``:

* ``"prose"``: every window element except the centre,
* ``"matlab"``: only the elements off the centre row and centre column.

The image is zero padded by ``w // 2`` on every side and each pass writes
into a fresh buffer, so a pass is independent of visit order. With
``passes > 1`` each pass consumes the previous pass's output.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .interfaces import QubitLattice

__all__ = [
    "WINDOW_MODES",
    "KernelSpec",
    "window_offsets",
    "bed_window",
    "bed_classical",
    "bed_quantum",
    "inject_noise",
]

WINDOW_MODES = ("prose", "matlab")


@dataclass(frozen=True)
class KernelSpec:
    width: int = 3
    passes: int = 1
    window_mode: str = "prose"

    def __post_init__(self):
        if self.width < 3 or self.width % 2 == 0:
            raise ValueError(f"kernel width must be odd and >= 3, got {self.width}")
        if self.passes < 1:
            raise ValueError(f"passes must be >= 1, got {self.passes}")
        if self.window_mode not in WINDOW_MODES:
            raise ValueError(f"window_mode must be one of {WINDOW_MODES}, got {self.window_mode!r}")

    @property
    def half(self) -> int:
        return self.width // 2


def window_offsets(width: int, window_mode: str = "prose") -> list[tuple[int, int]]:
    """(row, col) offsets from the centre that feed the OR, in raster order."""
    if window_mode not in WINDOW_MODES:
        raise ValueError(f"window_mode must be one of {WINDOW_MODES}, got {window_mode!r}")
    h = width // 2
    offsets = []
    for dr in range(-h, h + 1):
        for dc in range(-h, h + 1):
            if window_mode == "prose" and (dr, dc) == (0, 0):
                continue
            if window_mode == "matlab" and (dr == 0 or dc == 0):
                continue
            offsets.append((dr, dc))
    return offsets


def bed_window(window, window_mode: str = "prose") -> int:
    """Detector output for a single w x w window of bits."""
    window = np.asarray(window)
    if window.ndim != 2 or window.shape[0] != window.shape[1] or window.shape[0] % 2 == 0:
        raise ValueError(f"window must be square with odd side, got shape {window.shape}")
    h = window.shape[0] // 2
    aux = 0
    for dr, dc in window_offsets(window.shape[0], window_mode):
        aux |= int(window[h + dr, h + dc])
    return int(window[h, h]) ^ aux


def _as_kernel(kernel, kwargs):
    if kernel is None:
        return KernelSpec(**kwargs)
    if kwargs:
        raise TypeError("pass either a KernelSpec or keyword parameters, not both")
    return kernel


def bed_classical(img, kernel: KernelSpec | None = None, **kwargs) -> np.ndarray:
    """Run the Boolean detector on a Boolean image.

    Either pass a :class:`KernelSpec` or its fields as keywords, e.g.
    ``bed_classical(img, width=5, passes=2)``.
    """
    k = _as_kernel(kernel, kwargs)
    cur = np.asarray(img)
    if cur.ndim != 2 or 0 in cur.shape:
        raise ValueError(f"expected a non-empty 2-D Boolean image, got shape {cur.shape}")
    cur = cur.astype(bool)
    rows, cols = cur.shape
    h = k.half
    offsets = window_offsets(k.width, k.window_mode)
    for _ in range(k.passes):
        padded = np.pad(cur, h, constant_values=False)
        aux = np.zeros_like(cur)
        for dr, dc in offsets:
            aux |= padded[h + dr : h + dr + rows, h + dc : h + dc + cols]
        cur = cur ^ aux
    return cur


def bed_quantum(lattice: QubitLattice, kernel: KernelSpec | None = None, **kwargs) -> QubitLattice:
    """The same detector over a qubit lattice, with PAO OR/XOR and |0> padding."""
    k = _as_kernel(kernel, kwargs)
    rows, cols = lattice.shape
    h = k.half
    offsets = window_offsets(k.width, k.window_mode)
    cur = lattice
    for _ in range(k.passes):
        pa = np.pad(cur.alpha, h, constant_values=1.0)
        pb = np.pad(cur.beta, h, constant_values=0.0)
        aux = QubitLattice(np.ones(cur.shape), np.zeros(cur.shape))
        for dr, dc in offsets:
            sl = (slice(h + dr, h + dr + rows), slice(h + dc, h + dc + cols))
            aux = aux.pao_or(QubitLattice(pa[sl], pb[sl]))
        cur = cur.pao_xor(aux)
    return cur


def inject_noise(lattice: QubitLattice, p_flip: float, rng_seed=None) -> QubitLattice:
    """Flip each cell (PAO NOT) independently with probability ``p_flip``."""
    if not 0.0 <= p_flip <= 1.0:
        raise ValueError(f"flip probability must lie in [0, 1], got {p_flip}")
    if p_flip == 0.0:
        return lattice
    flips = np.random.default_rng(rng_seed).random(lattice.shape) < p_flip
    return lattice.where(flips, lattice.pao_not())
