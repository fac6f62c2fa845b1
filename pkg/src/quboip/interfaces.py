"""Classical-to-quantum and quantum-to-classical bridges.

A Boolean image enters the quantum side as a :class:`QubitLattice` of basis
states (0 -> |0>, 1 -> |1>) and leaves it through one of two readouts:

* Mode I measures each cell, reads its z-projection and applies the
  classical converter.
* Mode II expects the lattice to have gone through the quantum converter
  first (a :class:`ConvertedLattice`), so the measurement yields the
  converted projection directly.

For more than one bit per pixel, both readouts finish with
:func:`equalize_round`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .measurement import CBS_TOL, NotCBSError
from .pao import MU_TOL, NORM_TOL, KET0, KET1, Qubit, canonical_phase, from_angles, z_projection

__all__ = [
    "PreparationError",
    "QubitLattice",
    "ConvertedLattice",
    "c2q_bit",
    "c2q_image",
    "iqs_prepare",
    "ideal_source",
    "jittered_source",
    "constant_source",
    "quantum_convert_lattice",
    "q2c_mode1",
    "q2c_mode2",
    "equalize_round",
]


class PreparationError(RuntimeError):
    """The qubit source never settled on the requested basis state."""


@dataclass(frozen=True, eq=False)
class QubitLattice:
    """A 2-D grid of qubits stored as two complex amplitude arrays.

    Amplitudes are kept in canonical phase (alpha real, nonnegative). All
    PAO operations are elementwise and return new lattices.
    """

    alpha: np.ndarray
    beta: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.alpha, dtype=np.complex128)
        b = np.asarray(self.beta, dtype=np.complex128)
        if a.shape != b.shape or a.ndim != 2:
            raise ValueError(f"amplitude arrays must be 2-D and equal in shape, got {a.shape} and {b.shape}")
        norm = np.abs(a) ** 2 + np.abs(b) ** 2
        if a.size and np.max(np.abs(norm - 1.0)) > NORM_TOL:
            raise ValueError("every lattice cell must be a normalized state")
        a, b = canonical_phase(a, b)
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @classmethod
    def from_qubits(cls, grid) -> "QubitLattice":
        alpha = np.array([[q.alpha for q in row] for row in grid], dtype=np.complex128)
        beta = np.array([[q.beta for q in row] for row in grid], dtype=np.complex128)
        return cls(alpha, beta)

    @classmethod
    def filled(cls, shape, q: Qubit) -> "QubitLattice":
        return cls(np.full(shape, q.alpha, dtype=np.complex128), np.full(shape, q.beta, dtype=np.complex128))

    @property
    def shape(self) -> tuple[int, int]:
        return self.alpha.shape

    @property
    def rows(self) -> int:
        return self.shape[0]

    @property
    def cols(self) -> int:
        return self.shape[1]

    def __getitem__(self, index) -> Qubit:
        r, c = index
        return Qubit(self.alpha[r, c], self.beta[r, c])

    def to_qubits(self) -> list[list[Qubit]]:
        return [[self[r, c] for c in range(self.cols)] for r in range(self.rows)]

    def z_projection(self) -> np.ndarray:
        return np.abs(self.alpha)

    def mu(self) -> np.ndarray:
        return 1.0 - np.abs(self.alpha)

    def cbs_bits(self, tol: float = CBS_TOL) -> np.ndarray:
        """Per-cell basis bit, or -1 where the cell is not a basis state."""
        bits = np.full(self.shape, -1, dtype=np.int8)
        bits[np.abs(self.alpha) <= tol] = 1
        bits[np.abs(self.beta) <= tol] = 0
        return bits

    def is_cbs_pure(self, tol: float = CBS_TOL) -> bool:
        return bool(np.all(self.cbs_bits(tol) >= 0))

    def isclose(self, other: "QubitLattice", tol: float = 1e-9) -> bool:
        if self.shape != other.shape:
            return False
        overlap = np.conj(self.alpha) * other.alpha + np.conj(self.beta) * other.beta
        mag = np.abs(overlap)
        if np.any(mag == 0):
            return False
        phase = overlap / mag
        return bool(
            np.all(np.abs(self.alpha * phase - other.alpha) <= tol)
            and np.all(np.abs(self.beta * phase - other.beta) <= tol)
        )

    def where(self, mask, other: "QubitLattice") -> "QubitLattice":
        """Cells of ``other`` where ``mask`` holds, cells of ``self`` elsewhere."""
        return QubitLattice(np.where(mask, other.alpha, self.alpha), np.where(mask, other.beta, self.beta))

    def pao_not(self) -> "QubitLattice":
        return QubitLattice(self.beta, self.alpha)

    def pao_and(self, other: "QubitLattice") -> "QubitLattice":
        return self.where(other.mu() < self.mu() - MU_TOL, other)

    def pao_or(self, other: "QubitLattice") -> "QubitLattice":
        return self.where(other.mu() > self.mu() + MU_TOL, other)

    def pao_xor(self, other: "QubitLattice") -> "QubitLattice":
        return self.pao_and(other.pao_not()).pao_or(self.pao_not().pao_and(other))


@dataclass(frozen=True, eq=False)
class ConvertedLattice:
    """Raw output of the quantum converter, ``|0> - |psi>``, cell by cell.

    ``first`` holds ``1 - alpha``, the converted projection; ``second`` holds
    ``-beta``. The pair is not a normalized state.
    """

    first: np.ndarray
    second: np.ndarray

    @property
    def shape(self):
        return self.first.shape

    def source(self) -> QubitLattice:
        """The lattice that was converted, recovered as ``|0> - pair``."""
        return QubitLattice(1.0 - self.first, -self.second)


def c2q_bit(b) -> Qubit:
    if b not in (0, 1):
        raise ValueError(f"expected a bit, got {b!r}")
    return KET1 if b else KET0


def c2q_image(img) -> QubitLattice:
    """Map a Boolean image onto a lattice of basis states."""
    img = np.asarray(img)
    if img.ndim != 2:
        raise ValueError(f"expected a 2-D Boolean image, got shape {img.shape}")
    if img.dtype != bool:
        if not np.isin(img, (0, 1)).all():
            raise ValueError("Boolean image must contain only 0 and 1")
        img = img.astype(bool)
    return QubitLattice(np.where(img, 0.0, 1.0), np.where(img, 1.0, 0.0))


def ideal_source(bit):
    """Qubit source that always emits the exact basis state for ``bit``."""
    q = c2q_bit(bit)
    return lambda rng: q


def constant_source(q: Qubit):
    return lambda rng: q


def jittered_source(bit, jitter: float):
    """Source whose polar angle wanders uniformly by up to ``jitter`` radians."""
    base = math.pi if bit else 0.0

    def emit(rng):
        theta = base + rng.uniform(-jitter, jitter)
        # reflect back onto [0, pi]
        theta = abs(theta)
        if theta > math.pi:
            theta = 2 * math.pi - theta
        return from_angles(min(max(theta, 0.0), math.pi), rng.uniform(0.0, 2 * math.pi))

    return emit


def iqs_prepare(target, tol: float, max_iters: int, source, rng_seed=None) -> Qubit:
    """Simulated input-qubit-source feedback loop.

    Candidates are drawn from ``source(rng)`` until one's z-projection is
    within ``tol`` of the set-point (1 for target 0, 0 for target 1). The
    accepted candidate is snapped to the exact basis state.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if max_iters < 1:
        raise ValueError("max_iters must be at least 1")
    ideal = c2q_bit(target)
    setpoint = z_projection(ideal)
    rng = np.random.default_rng(rng_seed)
    for _ in range(max_iters):
        candidate = source(rng)
        if abs(z_projection(candidate) - setpoint) <= tol:
            return ideal
    raise PreparationError(f"no candidate within {tol} of the set-point for bit {target} after {max_iters} draws")


def _readout_bits(lattice: QubitLattice, rng_seed):
    bits = lattice.cbs_bits()
    undecided = bits < 0
    if undecided.any():
        if rng_seed is None:
            raise NotCBSError(f"{int(undecided.sum())} lattice cells are not basis states and no seed was given")
        # one uniform draw per cell, indexed by position
        u = np.random.default_rng(rng_seed).random(lattice.shape)
        p0 = np.abs(lattice.alpha) ** 2
        bits = np.where(undecided, (u >= p0).astype(np.int8), bits)
    return bits.astype(np.int64)


def _finish(mu_levels, depth_bits):
    if depth_bits == 1:
        return mu_levels.astype(bool)
    return equalize_round(mu_levels, depth_bits)


def q2c_mode1(lattice: QubitLattice, depth_bits: int = 1, rng_seed=None) -> np.ndarray:
    """Measure, read the z-projection level, then apply the classical converter.

    Returns a Boolean image for one bit per pixel, otherwise a gray image.
    Non-basis cells are sampled from ``rng_seed``; without a seed they raise
    :class:`~quboip.measurement.NotCBSError`.
    """
    if depth_bits < 1:
        raise ValueError(f"bit depth must be >= 1, got {depth_bits}")
    top = (1 << depth_bits) - 1
    bits = _readout_bits(lattice, rng_seed)
    # after measurement the projection is 1 for |0> and 0 for |1>
    alpha_level = top * (1 - bits)
    return _finish(top - alpha_level, depth_bits)


def quantum_convert_lattice(lattice: QubitLattice) -> ConvertedLattice:
    return ConvertedLattice(1.0 - lattice.alpha.real, -lattice.beta)


def q2c_mode2(converted: ConvertedLattice, depth_bits: int = 1, rng_seed=None) -> np.ndarray:
    """Readout of a lattice that passed through the quantum converter.

    The first converted component is read directly as the converted
    projection; the second component is ignored.
    """
    if not isinstance(converted, ConvertedLattice):
        raise TypeError("Mode II readout needs a ConvertedLattice; use quantum_convert_lattice first")
    if depth_bits < 1:
        raise ValueError(f"bit depth must be >= 1, got {depth_bits}")
    top = (1 << depth_bits) - 1
    first = np.asarray(converted.first, dtype=np.float64)
    mu = np.full(first.shape, -1, dtype=np.int64)
    mu[np.abs(first) <= CBS_TOL] = 0
    mu[np.abs(first - 1.0) <= CBS_TOL] = 1
    if (mu < 0).any():
        mu = _readout_bits(converted.source(), rng_seed)
    return _finish(top * mu, depth_bits)


def equalize_round(values, depth_bits: int) -> np.ndarray:
    """Stretch a real grid onto [0, 2**B - 1] and round half up.

    The stretch maps the grid minimum to 0 and its maximum to ``2**B - 1``.
    A constant grid is not stretched, only rounded and clamped.
    """
    v = np.asarray(values, dtype=np.float64)
    if v.size == 0:
        raise ValueError("cannot equalize an empty grid")
    if not np.all(np.isfinite(v)):
        raise ValueError("values must be finite")
    if depth_bits < 1:
        raise ValueError(f"bit depth must be >= 1, got {depth_bits}")
    top = (1 << depth_bits) - 1
    lo, hi = v.min(), v.max()
    if hi > lo:
        v = (v - lo) * (top / (hi - lo))
    out = np.clip(np.floor(v + 0.5), 0, top)
    return out.astype(np.uint8 if depth_bits <= 8 else np.uint16 if depth_bits <= 16 else np.uint64)
