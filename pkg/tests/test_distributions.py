import math

import numpy as np
import pytest

from revpinsker import (
    ratio_extremes,
    total_variation,
    validate_distribution,
)
from revpinsker.errors import (
    EmptyVector,
    LengthMismatch,
    NegativeWeight,
    NotAbsolutelyContinuous,
    SumOutOfTolerance,
)


def test_validate_already_normalized():
    d = validate_distribution([0.5, 0.25, 0.25])
    np.testing.assert_allclose(d.weights, [0.5, 0.25, 0.25])


def test_validate_point_mass():
    d = validate_distribution([1.0])
    assert d.n == 1
    assert d.weights[0] == 1.0


def test_validate_rejects_negative():
    with pytest.raises(NegativeWeight):
        validate_distribution([0.5, -0.1, 0.6])


def test_validate_rejects_empty():
    with pytest.raises(EmptyVector):
        validate_distribution([])


def test_validate_rejects_bad_sum():
    with pytest.raises(SumOutOfTolerance):
        validate_distribution([0.5, 0.6])


def test_validate_renormalizes_within_tolerance():
    d = validate_distribution([0.5, 0.5 + 1e-10])
    assert math.isclose(float(d.weights.sum()), 1.0, rel_tol=0, abs_tol=1e-15)


def test_weights_are_read_only():
    d = validate_distribution([0.5, 0.5])
    with pytest.raises(ValueError):
        d.weights[0] = 0.3


def test_total_variation_identical():
    d = validate_distribution([0.5, 0.5])
    assert total_variation(d, d) == 0.0


def test_total_variation_example():
    P = validate_distribution([0.25, 0.5, 0.25])
    Q = validate_distribution([0.5, 0.25, 0.25])
    assert total_variation(P, Q) == pytest.approx(0.25, abs=1e-15)


def test_total_variation_disjoint():
    P = validate_distribution([1.0, 0.0])
    Q = validate_distribution([0.0, 1.0])
    assert total_variation(P, Q) == 1.0


def test_total_variation_length_mismatch():
    with pytest.raises(LengthMismatch):
        total_variation(validate_distribution([1.0]), validate_distribution([0.5, 0.5]))


def test_ratio_extremes_example():
    P = validate_distribution([0.25, 0.5, 0.25])
    Q = validate_distribution([0.5, 0.25, 0.25])
    m, M = ratio_extremes(P, Q)
    assert m == pytest.approx(0.5, abs=1e-15)
    assert M == pytest.approx(2.0, abs=1e-15)


def test_ratio_extremes_identical():
    d = validate_distribution([0.3, 0.7])
    assert ratio_extremes(d, d) == (1.0, 1.0)


def test_ratio_extremes_zero_atom():
    P = validate_distribution([0.0, 0.5, 0.5])
    Q = validate_distribution([0.25, 0.25, 0.5])
    m, M = ratio_extremes(P, Q)
    assert m == 0.0
    assert M == pytest.approx(2.0, abs=1e-15)


def test_ratio_extremes_requires_absolute_continuity():
    P = validate_distribution([0.5, 0.5])
    Q = validate_distribution([1.0, 0.0])
    with pytest.raises(NotAbsolutelyContinuous):
        ratio_extremes(P, Q)
