import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quboip.measurement import (
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
from quboip.pao import KET0, KET1, Qubit, from_angles

qubits = st.builds(from_angles, st.floats(0.0, math.pi), st.floats(0.0, 2 * math.pi, exclude_max=True))


def test_probabilities():
    assert outcome_probability(KET0, M0) == 1
    assert abs(outcome_probability(Qubit(0.6, 0.8), M0) - 0.36) < 1e-15
    assert abs(outcome_probability(Qubit(0.6, 0.8), M1) - 0.64) < 1e-15


def test_post_measurement():
    assert post_measurement_state(KET0, M0) == KET0
    assert post_measurement_state(Qubit(0.6, 0.8), M1) == KET1
    assert post_measurement_state(Qubit(0.6, 0.8), M0) == KET0
    with pytest.raises(ImpossibleOutcomeError):
        post_measurement_state(KET1, M0)


def test_completeness():
    assert check_completeness([M0, M1])
    assert not check_completeness([M0])
    assert not check_completeness([M0, M0])
    with pytest.raises(ValueError):
        check_completeness([M0, MeasurementOperator(np.eye(3), 0)])
    with pytest.raises(ValueError):
        check_completeness([])


def test_measure_cbs():
    assert measure_cbs(KET0) == (0, KET0)
    assert measure_cbs(KET1) == (1, KET1)
    assert measure_cbs(from_angles(math.pi, 1.0)) == (1, KET1)
    with pytest.raises(NotCBSError):
        measure_cbs(Qubit(math.sqrt(2) / 2, math.sqrt(2) / 2))


def test_cbs_idempotent():
    for q in (KET0, KET1):
        state = q
        for _ in range(10):
            bit, state = measure_cbs(state)
            assert state == q and bit == (q is KET1)


def test_measure_sampled_deterministic():
    assert measure_sampled(KET0, 5) == (0, KET0)
    q = Qubit(0.6, 0.8)
    assert all(measure_sampled(q, s) == measure_sampled(q, s) for s in range(50))


def test_measure_sampled_frequency():
    q = Qubit(0.6, 0.8)
    n = 100_000
    zeros = sum(measure_sampled(q, s)[0] == 0 for s in range(n))
    freq = zeros / n
    assert abs(freq - 0.36) <= 0.01
    # chi-square with one degree of freedom, 99.9% quantile is 10.83
    expected = np.array([0.36, 0.64]) * n
    observed = np.array([zeros, n - zeros])
    assert ((observed - expected) ** 2 / expected).sum() < 10.83


@given(qubits)
def test_probabilities_sum_to_one(q):
    assert abs(outcome_probability(q, M0) + outcome_probability(q, M1) - 1) <= 1e-12


@given(qubits, st.integers(0, 2**32 - 1))
def test_post_states_normalized(q, seed):
    bit, post = measure_sampled(q, seed)
    assert abs(abs(post.alpha) ** 2 + abs(post.beta) ** 2 - 1) <= 1e-12
    assert post.isclose(KET1 if bit else KET0, 1e-12)
