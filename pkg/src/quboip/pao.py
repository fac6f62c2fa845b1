"""Single-qubit states and Pole-to-pole Axis Only (PAO) logic.

Under PAO only the z-axis projection of a Bloch-sphere state carries
information. A state's projection is ``alpha = cos(theta/2)`` and its
converted projection is ``mu = 1 - alpha``; logic operations order states
by ``mu``:

* AND selects the argument with the smaller ``mu`` (minimum),
* OR selects the argument with the larger ``mu`` (maximum),
* NOT swaps the two amplitudes,
* XOR is ``(a AND NOT b) OR (NOT a AND b)``.

On the computational basis states these reduce to ordinary Boolean logic
with ``|0>`` as false and ``|1>`` as true.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "NORM_TOL",
    "MU_TOL",
    "Qubit",
    "BlochAngles",
    "QuditCBS",
    "KET0",
    "KET1",
    "from_angles",
    "z_projection",
    "classical_convert",
    "classical_convert_multilevel",
    "quantum_convert",
    "mu_of",
    "pao_not",
    "pao_and",
    "pao_or",
    "pao_xor",
]

NORM_TOL = 1e-12
MU_TOL = 1e-12


def canonical_phase(alpha, beta):
    """Strip the global phase so that alpha is real and nonnegative.

    Works elementwise on arrays. When alpha vanishes, beta is made real and
    nonnegative instead.
    """
    alpha = np.asarray(alpha, dtype=np.complex128)
    beta = np.asarray(beta, dtype=np.complex128)
    mag_a = np.abs(alpha)
    ref = np.where(mag_a > 0, alpha, beta)
    phase = np.exp(-1j * np.angle(ref))
    return mag_a.astype(np.complex128), beta * phase


@dataclass(frozen=True)
class Qubit:
    """A normalized single-qubit state ``alpha|0> + beta|1>``.

    The global phase is removed on construction, so states that differ only
    by ``e^{i gamma}`` share one representation (up to rounding; compare
    with :meth:`isclose`).
    """

    alpha: complex
    beta: complex

    def __post_init__(self):
        a, b = complex(self.alpha), complex(self.beta)
        if not (cmath.isfinite(a) and cmath.isfinite(b)):
            raise ValueError("qubit amplitudes must be finite")
        norm = abs(a) ** 2 + abs(b) ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"qubit is not normalized: |alpha|^2 + |beta|^2 = {norm!r}")
        ca, cb = canonical_phase(a, b)
        object.__setattr__(self, "alpha", complex(ca))
        object.__setattr__(self, "beta", complex(cb))

    @classmethod
    def normalized(cls, alpha, beta) -> "Qubit":
        """Build a state from amplitudes of any nonzero length."""
        norm = math.sqrt(abs(alpha) ** 2 + abs(beta) ** 2)
        if norm == 0:
            raise ValueError("cannot normalize the zero vector")
        return cls(alpha / norm, beta / norm)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.alpha, self.beta], dtype=np.complex128)

    @property
    def theta(self) -> float:
        return 2.0 * math.acos(min(1.0, abs(self.alpha)))

    @property
    def phi(self) -> float:
        if abs(self.beta) == 0 or abs(self.alpha) == 0:
            return 0.0
        return cmath.phase(self.beta) % (2 * math.pi)

    @property
    def angles(self) -> "BlochAngles":
        return BlochAngles(self.theta, self.phi)

    def isclose(self, other: "Qubit", tol: float = 1e-9) -> bool:
        """Amplitude-wise closeness up to a global phase."""
        a, b = self.vector, other.vector
        overlap = np.vdot(a, b)
        if abs(overlap) == 0:
            return False
        aligned = a * (overlap / abs(overlap))
        return bool(np.max(np.abs(aligned - b)) <= tol)

    def cbs_bit(self, tol: float = 1e-9) -> int | None:
        """0 or 1 if the state is within ``tol`` of ``|0>`` or ``|1>``, else None."""
        if abs(self.beta) <= tol:
            return 0
        if abs(self.alpha) <= tol:
            return 1
        return None

    def is_cbs(self, tol: float = 1e-9) -> bool:
        return self.cbs_bit(tol) is not None


@dataclass(frozen=True)
class BlochAngles:
    """Polar angle ``theta`` in [0, pi] and azimuth ``phi`` in [0, 2 pi)."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta={self.theta!r} outside [0, pi]")
        if not 0.0 <= self.phi < 2 * math.pi:
            raise ValueError(f"phi={self.phi!r} outside [0, 2 pi)")

    def to_qubit(self) -> Qubit:
        return Qubit(math.cos(self.theta / 2), cmath.exp(1j * self.phi) * math.sin(self.theta / 2))


KET0 = Qubit(1.0, 0.0)
KET1 = Qubit(0.0, 1.0)


def from_angles(theta, phi: float = 0.0) -> Qubit:
    """``cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>``.

    ``theta`` may also be a :class:`BlochAngles`.
    """
    if isinstance(theta, BlochAngles):
        return theta.to_qubit()
    return BlochAngles(theta, phi).to_qubit()


def z_projection(q: Qubit) -> float:
    """Projection onto the pole-to-pole axis, ``|alpha| = cos(theta/2)``."""
    return abs(q.alpha)


def classical_convert(alpha: float) -> float:
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"projection {alpha!r} outside [0, 1]")
    return 1.0 - alpha


def classical_convert_multilevel(alpha, depth_bits: int):
    """``(2**B - 1) - alpha`` for a B-bit level in [0, 2**B - 1]."""
    if depth_bits < 1:
        raise ValueError(f"bit depth must be >= 1, got {depth_bits}")
    top = (1 << depth_bits) - 1
    if not 0 <= alpha <= top:
        raise ValueError(f"level {alpha!r} outside [0, {top}]")
    return top - alpha


def quantum_convert(q: Qubit) -> tuple[complex, complex]:
    """``|0> - |psi>`` as a raw component pair ``(1 - alpha, -beta)``.

    The result is not a normalized state. Only its first component is used
    downstream; it equals :func:`mu_of` for the input.
    """
    return (1.0 - q.alpha, -q.beta)


def mu_of(q: Qubit) -> float:
    """Converted projection ``1 - cos(theta/2)``, the ordering key of PAO logic."""
    return 1.0 - abs(q.alpha)


def pao_not(q: Qubit) -> Qubit:
    return Qubit(q.beta, q.alpha)


def pao_and(q1: Qubit, q2: Qubit) -> Qubit:
    """Minimum by ``mu``; ties (within ``MU_TOL``) keep ``q1``."""
    return q2 if mu_of(q2) < mu_of(q1) - MU_TOL else q1


def pao_or(q1: Qubit, q2: Qubit) -> Qubit:
    """Maximum by ``mu``; ties (within ``MU_TOL``) keep ``q1``."""
    return q2 if mu_of(q2) > mu_of(q1) + MU_TOL else q1


def pao_xor(q1: Qubit, q2: Qubit) -> Qubit:
    return pao_or(pao_and(q1, pao_not(q2)), pao_and(pao_not(q1), q2))


@dataclass(frozen=True)
class QuditCBS:
    """Computational basis state ``|k>`` of a B-qubit register.

    ``z_level`` is the register's multilevel projection: ``2**B - 1`` for
    ``|0...0>`` down to 0 for ``|1...1>``, mirroring ``alpha`` of a single
    qubit. ``mu`` is the converted level, which equals ``k``.
    """

    depth_bits: int
    level: int

    def __post_init__(self):
        if self.depth_bits < 1:
            raise ValueError(f"bit depth must be >= 1, got {self.depth_bits}")
        top = (1 << self.depth_bits) - 1
        if not 0 <= self.level <= top:
            raise ValueError(f"level {self.level} outside [0, {top}]")

    @property
    def vector(self) -> np.ndarray:
        v = np.zeros(1 << self.depth_bits, dtype=np.complex128)
        v[self.level] = 1.0
        return v

    @property
    def z_level(self) -> int:
        return (1 << self.depth_bits) - 1 - self.level

    @property
    def mu(self) -> int:
        return classical_convert_multilevel(self.z_level, self.depth_bits)
