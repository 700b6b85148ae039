import random
from fractions import Fraction as Q
from itertools import permutations

import pytest

from poscert.schurdet import (
    StrictTuple,
    TruncatedSeries,
    det_series_direct,
    det_series_formula,
    schur_eval,
    validate_strict_tuple,
    vandermonde,
)


def test_strict_tuple_validation():
    assert validate_strict_tuple((3, 1, 0)) == (3, 1, 0)
    for bad in ((), (1, 1), (0, 1), (2, -1)):
        with pytest.raises(ValueError):
            validate_strict_tuple(bad)
        with pytest.raises(ValueError):
            StrictTuple(bad)


def test_strict_tuple_weight_and_partition():
    t = StrictTuple((4, 2, 0))
    assert t.weight == 6
    assert t.to_partition() == (2, 1, 0)
    assert StrictTuple((2, 1, 0)).to_partition() == (0, 0, 0)
    # the wrapper is accepted anywhere a raw tuple is
    assert schur_eval(StrictTuple((2, 0)), [1, 2]) == 3


def test_schur_staircase_is_one():
    rng = random.Random(0)
    for n in (1, 2, 3, 4):
        stair = tuple(range(n - 1, -1, -1))
        xs = rng.sample(range(-9, 10), n)
        assert schur_eval(stair, xs) == 1


def test_schur_small_example():
    # exponents (2, 0) give the complete homogeneous h_1 = x1 + x2
    assert schur_eval((2, 0), [1, 2]) == 3
    assert schur_eval((2, 0), [Q(1, 2), 3]) == Q(7, 2)


def test_schur_repeated_entries_error():
    with pytest.raises(ValueError):
        schur_eval((2, 0), [1, 1])


def test_schur_is_symmetric_function():
    rng = random.Random(1)
    for _ in range(10):
        xs = rng.sample(range(-8, 9), 3)
        tpl = (5, 2, 0)
        base = schur_eval(tpl, xs)
        for p in permutations(xs):
            assert schur_eval(tpl, list(p)) == base


def test_truncated_series_ring():
    a = TruncatedSeries.make(3, [1, 1])
    b = TruncatedSeries.make(3, [1, -1])
    assert (a * b).coeffs == (1, 0, -1, 0)
    assert (a + b).coeffs == (2, 0, 0, 0)
    # truncation is consistent: t^3 * t = 0 at cutoff 3
    t3 = TruncatedSeries.make(3, [0, 0, 0, 1])
    t1 = TruncatedSeries.make(3, [0, 1])
    assert (t3 * t1).is_zero


def test_direct_n1():
    s = det_series_direct([2, 3, 5], [Q(2)], [Q(3)], 4)
    assert s.coeffs == (2, 3 * 6, 5 * 36, 0, 0)


def test_direct_n2_hand_example():
    s = det_series_direct([1, 1], [1, 2], [1, 2], 7)
    assert s.coeffs == (0, 1, 0, 0, 0, 0, 0, 0)


def test_direct_proportional_rows_vanish():
    s = det_series_direct([1, 1, 1], [2, 2], [1, 3], 7)
    assert s.is_zero
    assert vandermonde([2, 2]) == 0


def test_formula_matches_direct_hand_example():
    f = det_series_formula([1, 1], [1, 2], [1, 2], 7)
    assert f.coeffs == (0, 1, 0, 0, 0, 0, 0, 0)


def test_formula_f0_zero_shifts_lowest_weight():
    # with f_0 = 0 and N = 2 the lightest surviving tuple is (2, 1)
    s = det_series_formula([0, 1, 1, 1], [1, 2], [3, 4], 8)
    assert s.coeffs[0] == s.coeffs[1] == s.coeffs[2] == 0
    assert s.coeffs[3] != 0
    assert s == det_series_direct([0, 1, 1, 1], [1, 2], [3, 4], 8)


def test_cauchy_case_all_ones():
    # truncated geometric series: the classical Cauchy determinant case
    fc = [1] * 13
    a = det_series_direct(fc, [1, 2, 3], [1, -2, 4], 9)
    b = det_series_formula(fc, [1, 2, 3], [1, -2, 4], 9)
    assert a == b


def test_identity_randomized():
    rng = random.Random(2)
    for n in (1, 2, 3, 4):
        cut = n * (n - 1) // 2 + 6
        for _ in range(5):
            u = rng.sample(range(-7, 8), n)
            v = rng.sample(range(-7, 8), n)
            fc = [Q(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(9)]
            a = det_series_direct(fc, u, v, cut)
            b = det_series_formula(fc, u, v, cut)
            assert a == b
            assert all(c == 0 for c in a.coeffs[: n * (n - 1) // 2])


def test_swap_u_v_symmetry():
    rng = random.Random(3)
    for _ in range(5):
        u = rng.sample(range(-9, 10), 3)
        v = rng.sample(range(-9, 10), 3)
        fc = [rng.randint(-4, 4) for _ in range(8)]
        assert det_series_direct(fc, u, v, 9) == det_series_direct(fc, v, u, 9)
        assert det_series_formula(fc, u, v, 9) == det_series_formula(fc, v, u, 9)


def test_cutoff_validation():
    with pytest.raises(ValueError):
        det_series_direct([1], [1, 2, 3], [1, 2, 3], 2)
    with pytest.raises(ValueError):
        det_series_formula([1], [1, 2, 3], [1, 2, 3], 2)
    with pytest.raises(ValueError):
        det_series_formula([1, 1], [1, 1], [1, 2], 7)
