"""Scalar special function layer: stability is the point of these tests.

Reference values marked with their digit strings were evaluated at 50
decimal digits (terminating sums additionally cross-checked in exact
rational arithmetic) and are trusted well past double precision.
"""

import math

import numpy as np
import pytest

from jacobigroup.numerics import (
    BargmannIndex,
    PoleError,
    as_index,
    gauss_2f1_terminating,
    laguerre_assoc,
    log_gamma_ratio,
    pn_polynomial,
    pn_scaled_sequence,
    pn_sequence,
)


def test_index_validates_positive():
    with pytest.raises(ValueError):
        BargmannIndex(0.0)
    with pytest.raises(ValueError):
        BargmannIndex(-1.25)


def test_index_properties():
    assert BargmannIndex(0.5).weight_is_integer
    assert BargmannIndex(1.0).weight_is_integer
    assert not BargmannIndex(0.7).weight_is_integer
    assert BargmannIndex(0.25).k_prime == 0.0
    assert BargmannIndex(1.25).k_prime == 1.0
    assert float(BargmannIndex(0.75)) == 0.75


def test_as_index_idempotent():
    bi = BargmannIndex(1.5)
    assert as_index(bi) is bi
    assert as_index(2.0).k == 2.0


def test_log_gamma_ratio_small_args():
    # lgamma(3.75) - lgamma(1.25)
    assert log_gamma_ratio(3.75, 1.25) == pytest.approx(
        1.585087415015230217004436, rel=1e-15
    )
    assert log_gamma_ratio(5.0, 5.0) == 0.0


def test_log_gamma_ratio_large_close_args():
    # the naive lgamma difference loses ~9 digits here to cancellation
    assert log_gamma_ratio(1e7 + 0.5, 1e7) == pytest.approx(
        8.059047812979159894062975, rel=1e-14
    )


def test_log_gamma_ratio_matches_lgamma_generic():
    for x, y in [(2.5, 7.0), (31.0, 3.0), (100.5, 99.5)]:
        assert log_gamma_ratio(x, y) == pytest.approx(
            math.lgamma(x) - math.lgamma(y), rel=1e-13
        )


def test_laguerre_zero_argument_binomial():
    # L_n^d(0) = C(n+d, n)
    assert laguerre_assoc(2, 3, 0.0) == pytest.approx(10.0)
    assert laguerre_assoc(5, 0, 0.0) == pytest.approx(1.0)


def test_laguerre_reference_value():
    assert laguerre_assoc(25, 3, 7.3) == pytest.approx(
        -38.35987995500567371075, rel=1e-13
    )


def test_gauss_2f1_linear_case():
    # F(-1, b; c; x) = 1 - b x / c
    assert gauss_2f1_terminating(1, 2.0, 3.0, 0.5) == pytest.approx(2.0 / 3.0)


def test_gauss_2f1_cancellation_hostile():
    # alternating sum whose terms peak 27 orders above the result; a plain
    # compensated float accumulation returns noise here (observed rel err
    # ~1e11), so this value pins the escalation to exact evaluation
    assert gauss_2f1_terminating(40, 40.5, 1, 0.81) == pytest.approx(
        0.01679061800752649645085139, rel=1e-12
    )


def test_gauss_2f1_moderate_matches_fast_path():
    # all-positive series, fast path applies
    got = gauss_2f1_terminating(6, -11.5, 4.0, -0.92)
    term = 1.0
    tot = 1.0
    for j in range(6):
        term *= (-(6 - j)) * (-11.5 + j) / ((4.0 + j) * (j + 1)) * (-0.92)
        tot += term
    assert got == pytest.approx(tot, rel=1e-13)


def test_gauss_2f1_pole_detection():
    with pytest.raises(PoleError):
        gauss_2f1_terminating(10, 3.0, -5, 0.3)
    # upper parameter terminates the series before the pole is reached
    assert gauss_2f1_terminating(10, -2.0, -5, 0.3) == pytest.approx(0.205)
    # pole beyond the last term is harmless
    gauss_2f1_terminating(10, 1.0, -12.5, 0.1)


def test_pn_low_orders():
    # P_0 = 1, P_1 = z, P_2 = z^2 + w, P_3 = z^3 + 3 w z
    z, w = 1.7 - 0.3j, 0.4 + 0.1j
    assert pn_polynomial(0, z, w) == 1.0
    assert pn_polynomial(1, z, w) == z
    assert pn_polynomial(2, z, w) == pytest.approx(z * z + w)
    assert pn_polynomial(3, z, w) == pytest.approx(z**3 + 3 * w * z)


def test_pn_special_lines():
    # w = 0 collapses to plain powers; z = 0 leaves double factorials
    seq = pn_sequence(5, 2.0, 0.0)
    assert np.allclose(seq, [2.0**n for n in range(6)])
    seq0 = pn_sequence(6, 0.0, 1.0)
    assert np.allclose(seq0, [1, 0, 1, 0, 3, 0, 15])


def test_pn_closed_sum_cross_check():
    # independent closed form: P_n = sum_j n!/(j! (n-2j)! 2^j) w^j z^(n-2j)
    z, w = 0.8 + 0.5j, -0.3 + 0.6j
    n = 9
    ref = sum(
        math.factorial(n)
        / (math.factorial(j) * math.factorial(n - 2 * j) * 2**j)
        * w**j
        * z ** (n - 2 * j)
        for j in range(n // 2 + 1)
    )
    assert pn_polynomial(n, z, w) == pytest.approx(ref, rel=1e-13)


def test_pn_scaled_sequence_reference():
    # q_30 = P_30 / sqrt(30!) at a generic point, 50-digit reference
    got = pn_scaled_sequence(30, 1.2 - 0.4j, 0.35 + 0.2j)[30]
    want = -0.001291883948878333130714 + 0.0007695210658529870896058j
    assert abs(got - want) < 1e-15 * abs(want) * 1e2


def test_pn_scaled_consistent_with_raw():
    z, w = 1.3, 0.4
    got = pn_scaled_sequence(4, z, w)[4]
    assert got == pytest.approx(pn_polynomial(4, z, w) / math.sqrt(24.0))
