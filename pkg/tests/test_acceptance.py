"""Exit criteria for the package, one test per criterion.

Run on its own with ``pytest tests/test_acceptance.py``; the terminal
summary lists a PASS/FAIL line for every criterion.
"""

import math
import time

import numpy as np
import pytest

from quboip.bitplane import recombine, slice_bitplanes
from quboip.edge import KernelSpec, bed_classical, bed_quantum, inject_noise
from quboip.interfaces import c2q_image, q2c_mode1
from quboip.measurement import M0, M1, check_completeness, measure_cbs, measure_sampled, outcome_probability
from quboip.metrics import ooie
from quboip.pao import (
    KET0,
    KET1,
    Qubit,
    classical_convert,
    from_angles,
    mu_of,
    pao_and,
    pao_not,
    pao_or,
    pao_xor,
    z_projection,
)
from quboip.pipeline import PipelineConfig, run_pipeline
from quboip.image_io import save_image

K = {0: KET0, 1: KET1}

# (psi1, psi2) -> AND, OR, NOT psi1, NOT psi2, XOR, as listed for basis states
LOGIC_TABLE = {
    (0, 0): (0, 0, 1, 1, 0),
    (0, 1): (0, 1, 1, 0, 1),
    (1, 0): (0, 1, 0, 1, 1),
    (1, 1): (1, 1, 0, 0, 0),
}
# (psi1, psi2) -> alpha1, alpha2, mu1, mu2
PROJECTION_TABLE = {
    (0, 0): (1, 1, 0, 0),
    (0, 1): (1, 0, 0, 1),
    (1, 0): (0, 1, 1, 0),
    (1, 1): (0, 0, 1, 1),
}
# (mu1, mu2) -> AND_mu, OR_mu, XOR_mu
MU_TABLE = {
    (0, 0): (0, 0, 0),
    (0, 1): (0, 1, 1),
    (1, 0): (0, 1, 1),
    (1, 1): (1, 1, 0),
}


@pytest.mark.acceptance(1, "CBS logic tables (AND/OR/NOT/XOR, alpha and mu values)")
def test_criterion_1_cbs_tables():
    start = time.perf_counter()
    checks = 0
    for (b1, b2), (and_, or_, not1, not2, xor) in LOGIC_TABLE.items():
        q1, q2 = K[b1], K[b2]
        assert pao_and(q1, q2) == K[and_]
        assert pao_or(q1, q2) == K[or_]
        assert pao_not(q1) == K[not1]
        assert pao_not(q2) == K[not2]
        assert pao_xor(q1, q2) == K[xor]
        checks += 5
    for (b1, b2), (a1, a2, m1, m2) in PROJECTION_TABLE.items():
        q1, q2 = K[b1], K[b2]
        assert (z_projection(q1), z_projection(q2)) == (a1, a2)
        assert (mu_of(q1), mu_of(q2)) == (m1, m2)
        checks += 2
        and_mu, or_mu, xor_mu = MU_TABLE[(m1, m2)]
        assert mu_of(pao_and(q1, q2)) == and_mu
        assert mu_of(pao_or(q1, q2)) == or_mu
        assert mu_of(pao_xor(q1, q2)) == xor_mu
        checks += 3
    assert checks >= 28
    assert time.perf_counter() - start < 1.0


@pytest.mark.acceptance(2, "classical/quantum oracle equivalence, OOIE = 0 (100 images x 8 kernels)")
def test_criterion_2_oracle_equivalence():
    start = time.perf_counter()
    kernels = [KernelSpec(w, p, m) for w in (3, 5) for p in (1, 2) for m in ("prose", "matlab")]
    for seed in range(100):
        img = np.random.default_rng(seed).random((32, 32)) < 0.5
        lattice = c2q_image(img)
        for k in kernels:
            quantum = q2c_mode1(bed_quantum(lattice, k), 1)
            classical = bed_classical(img, k)
            assert np.array_equal(quantum, classical), (seed, k)
            assert ooie(classical, quantum) == 0
    assert time.perf_counter() - start < 30.0


@pytest.mark.acceptance(3, "noise 0.01 on 64x64 gives OOIE = 1 in >= 99 of 100 trials")
def test_criterion_3_noise_table():
    start = time.perf_counter()
    k = KernelSpec()
    hits = 0
    for trial in range(100):
        img = np.random.default_rng(trial).random((64, 64)) < 0.5
        noisy = inject_noise(c2q_image(img), 0.01, rng_seed=10_000 + trial)
        quantum = q2c_mode1(bed_quantum(noisy, k), 1)
        hits += ooie(bed_classical(img, k), quantum)
    assert hits >= 99
    assert time.perf_counter() - start < 30.0


@pytest.mark.acceptance(4, "bitplane slicing is lossless (all 256 levels, 100 random 32x32)")
def test_criterion_4_slicer_lossless():
    start = time.perf_counter()
    for v in range(256):
        img = np.array([[v]], dtype=np.uint8)
        assert recombine(slice_bitplanes(img)).item() == v
    for seed in range(100):
        img = np.random.default_rng(seed).integers(0, 256, size=(32, 32), dtype=np.uint8)
        assert np.array_equal(recombine(slice_bitplanes(img)), img)
    assert time.perf_counter() - start < 5.0


@pytest.mark.acceptance(5, "measurement postulate (sum to 1, completeness, idempotence, 0.36 +- 0.01)")
def test_criterion_5_measurement():
    rng = np.random.default_rng(5)
    for _ in range(1000):
        q = from_angles(rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi))
        assert abs(outcome_probability(q, M0) + outcome_probability(q, M1) - 1.0) <= 1e-12
    assert check_completeness([M0, M1])
    for q, bit in ((KET0, 0), (KET1, 1)):
        state = q
        for _ in range(20):
            got, state = measure_cbs(state)
            assert got == bit and state == q
    q = Qubit(0.6, 0.8)
    n = 100_000
    zeros = sum(measure_sampled(q, seed)[0] == 0 for seed in range(n))
    assert abs(zeros / n - 0.36) <= 0.01


@pytest.mark.acceptance(6, "PAO converter chain and z-projection = cos(theta/2) on 100 thetas")
def test_criterion_6_converter_chain():
    assert z_projection(KET0) == 1 and classical_convert(z_projection(KET0)) == 0
    assert z_projection(KET1) == 0 and classical_convert(z_projection(KET1)) == 1
    for theta in np.linspace(0.0, math.pi, 100):
        for phi in (0.0, 1.0, 4.0):
            assert abs(z_projection(from_angles(theta, phi)) - math.cos(theta / 2)) <= 1e-12


@pytest.mark.acceptance(7, "edge detector analytic cases (constant images, single centre pixel)")
def test_criterion_7_edge_analytic():
    for shape in ((2, 2), (3, 3), (5, 8), (16, 16)):
        for value in (False, True):
            img = np.full(shape, value)
            for mode in ("prose", "matlab"):
                k = KernelSpec(3, 1, mode)
                assert not bed_classical(img, k).any()
                out = bed_quantum(c2q_image(img), k)
                assert all(measure_cbs(out[r, c])[0] == 0 for r in range(shape[0]) for c in range(shape[1]))
    centre = np.zeros((3, 3), bool)
    centre[1, 1] = True
    corners = np.array([[1, 0, 1], [0, 1, 0], [1, 0, 1]], bool)
    assert bed_classical(centre, KernelSpec(3, 1, "prose")).all()
    assert np.array_equal(bed_classical(centre, KernelSpec(3, 1, "matlab")), corners)
    assert q2c_mode1(bed_quantum(c2q_image(centre), KernelSpec(3, 1, "prose"))).all()
    assert np.array_equal(q2c_mode1(bed_quantum(c2q_image(centre), KernelSpec(3, 1, "matlab"))), corners)


@pytest.mark.acceptance(8, "identical config and seed give byte-identical artifacts")
def test_criterion_8_determinism(tmp_path):
    src = tmp_path / "in.pgm"
    save_image(np.random.default_rng(8).integers(0, 256, size=(48, 40), dtype=np.uint8), src)
    cfg = dict(noise_flip_prob=0.02, seed=123, emit_bitplanes=True, emit_error_map=True)
    first = run_pipeline(PipelineConfig(src, tmp_path / "run1", **cfg))
    second = run_pipeline(PipelineConfig(src, tmp_path / "run2", **cfg))
    assert sorted(first.files) == sorted(second.files) and len(first.files) == 12
    for name in first.files:
        assert first.files[name].read_bytes() == second.files[name].read_bytes(), name


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
