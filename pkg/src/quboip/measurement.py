"""Projective measurement of single qubits in the computational basis."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .pao import KET0, KET1, Qubit

__all__ = [
    "CBS_TOL",
    "COMPLETENESS_TOL",
    "ImpossibleOutcomeError",
    "NotCBSError",
    "MeasurementOperator",
    "M0",
    "M1",
    "STANDARD_OPERATORS",
    "outcome_probability",
    "post_measurement_state",
    "check_completeness",
    "measure_cbs",
    "measure_sampled",
]

CBS_TOL = 1e-9
COMPLETENESS_TOL = 1e-12


class ImpossibleOutcomeError(ValueError):
    """Post-measurement state requested for an outcome of probability zero."""


class NotCBSError(ValueError):
    """A deterministic CBS measurement was requested on a superposition."""


@dataclass(frozen=True)
class MeasurementOperator:
    matrix: np.ndarray = field(repr=False)
    label: int

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.complex128)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"measurement operator must be square, got shape {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def effect(self) -> np.ndarray:
        """``M^dagger M``."""
        return self.matrix.conj().T @ self.matrix


M0 = MeasurementOperator(np.outer(KET0.vector, KET0.vector.conj()), 0)
M1 = MeasurementOperator(np.outer(KET1.vector, KET1.vector.conj()), 1)
STANDARD_OPERATORS = (M0, M1)


def _check_dims(q, op):
    if op.matrix.shape != (2, 2):
        raise ValueError(f"operator of shape {op.matrix.shape} cannot act on a qubit")


def outcome_probability(q: Qubit, op: MeasurementOperator) -> float:
    """``<psi| M^dagger M |psi>``."""
    _check_dims(q, op)
    psi = q.vector
    return float(np.real(np.vdot(psi, op.effect @ psi)))


def post_measurement_state(q: Qubit, op: MeasurementOperator) -> Qubit:
    """``M|psi> / sqrt(p)`` for the outcome described by ``op``."""
    p = outcome_probability(q, op)
    if p <= 0.0:
        raise ImpossibleOutcomeError(f"outcome {op.label} has probability zero for {q}")
    out = (op.matrix @ q.vector) / np.sqrt(p)
    return Qubit.normalized(out[0], out[1])


def check_completeness(ops, tol: float = COMPLETENESS_TOL) -> bool:
    """True iff ``sum_m M_m^dagger M_m`` is the identity within ``tol`` per entry."""
    ops = list(ops)
    if not ops:
        raise ValueError("need at least one measurement operator")
    shapes = {op.matrix.shape for op in ops}
    if len(shapes) != 1:
        raise ValueError(f"operators have mismatched dimensions: {sorted(shapes)}")
    total = sum(op.effect for op in ops)
    return bool(np.all(np.abs(total - np.eye(total.shape[0])) <= tol))


def measure_cbs(q: Qubit, tol: float = CBS_TOL) -> tuple[int, Qubit]:
    """Deterministic, non-destructive readout of a basis state."""
    bit = q.cbs_bit(tol)
    if bit is None:
        raise NotCBSError(f"{q} is not a computational basis state within {tol}")
    return bit, (KET1 if bit else KET0)


def measure_sampled(q: Qubit, rng_seed) -> tuple[int, Qubit]:
    """Draw an outcome with the Born probabilities and collapse the state.

    ``rng_seed`` is anything ``numpy.random.default_rng`` accepts (an int
    seed or a ``Generator``); the result is reproducible for a given seed.
    """
    rng = np.random.default_rng(rng_seed)
    p0 = outcome_probability(q, M0)
    bit = 0 if rng.random() < p0 else 1
    return bit, post_measurement_state(q, STANDARD_OPERATORS[bit])
