"""Quantum-Boolean image processing.

Bitplane slicing, Pole-to-pole Axis Only (PAO) qubit logic, classical and
quantum Boolean edge detection, and the OOIE agreement metric.
"""

from .bitplane import BitplaneStack, msb, pixel_to_bits, recombine, slice_bitplanes
from .edge import KernelSpec, bed_classical, bed_quantum, bed_window, inject_noise
from .image_io import NetpbmError, load_image, save_image, to_gray
from .interfaces import (
    ConvertedLattice,
    PreparationError,
    QubitLattice,
    c2q_bit,
    c2q_image,
    equalize_round,
    iqs_prepare,
    q2c_mode1,
    q2c_mode2,
    quantum_convert_lattice,
)
from .measurement import (
    M0,
    M1,
    ImpossibleOutcomeError,
    MeasurementOperator,
    NotCBSError,
    check_completeness,
    measure_cbs,
    measure_sampled,
    outcome_probability,
    post_measurement_state,
)
from .metrics import ComparisonReport, compare, diff_count, error_map, ooie
from .pao import (
    KET0,
    KET1,
    BlochAngles,
    QuditCBS,
    Qubit,
    classical_convert,
    classical_convert_multilevel,
    from_angles,
    mu_of,
    pao_and,
    pao_not,
    pao_or,
    pao_xor,
    quantum_convert,
    z_projection,
)
from .pipeline import PipelineConfig, PipelineResult, run_pipeline

__version__ = "0.1.0"
