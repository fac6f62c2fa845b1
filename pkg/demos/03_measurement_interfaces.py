"""Measurement and the classical/quantum bridges.

Basis states survive measurement unchanged, which is what makes the
Boolean pipeline lossless. Superpositions collapse with Born probabilities.

    python demos/03_measurement_interfaces.py
"""

import numpy as np

from quboip import (
    KET0,
    M0,
    M1,
    Qubit,
    c2q_image,
    check_completeness,
    iqs_prepare,
    measure_cbs,
    measure_sampled,
    outcome_probability,
    q2c_mode1,
    q2c_mode2,
    quantum_convert_lattice,
)
from quboip.interfaces import jittered_source

photon = Qubit(0.6, 0.8)
print("p(0), p(1) =", outcome_probability(photon, M0), outcome_probability(photon, M1))
print("{M0, M1} complete:", check_completeness([M0, M1]))

freq = np.mean([measure_sampled(photon, s)[0] == 0 for s in range(20_000)])
print(f"sampled p(0) over 20000 seeds: {freq:.4f}")

print("measuring |0> three times:", [measure_cbs(KET0)[0] for _ in range(3)])

# Preparing a |1> from a wobbly source: accept once the projection is close enough.
q = iqs_prepare(1, tol=0.01, max_iters=10_000, source=jittered_source(1, 0.5), rng_seed=0)
print("prepared:", q)

# Boolean image in, lattice of basis states, both readouts out.
img = np.random.default_rng(0).random((6, 8)) < 0.5
lattice = c2q_image(img)
mode1 = q2c_mode1(lattice, 1)
mode2 = q2c_mode2(quantum_convert_lattice(lattice), 1)
print("mode I recovers the image:", np.array_equal(mode1, img))
print("mode II agrees with mode I:", np.array_equal(mode1, mode2))
