from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from improv.dynamics import DynamicsWindow, compute_factor, rescale, window_new


def test_new_window_empty():
    w = window_new(4)
    assert len(w) == 0
    assert w.average is None
    with pytest.raises(ValueError):
        window_new(0)


def test_capacity_one_holds_last_only():
    w = window_new(1)
    w.push(10)
    assert w.average == 10
    w.push(90)
    assert w.average == 90 and len(w) == 1


def test_worked_push_sequence():
    w = window_new(4)
    assert w.push(28) == 28
    assert w.push(28) == 28
    assert w.sum == 56
    avg = w.push(38)
    assert w.sum == 94
    assert abs(float(avg) - 31.33) < 0.01
    assert w.push(25) == Fraction(119, 4)  # 29.75
    assert w.sum == 119
    # window rolls over: [28,38,25,40] then [38,25,40,30]
    assert w.push(40) == Fraction(131, 4)  # 32.75
    assert w.contents() == [28, 38, 25, 40]
    assert w.push(30) == Fraction(133, 4)  # 33.25
    assert w.contents() == [38, 25, 40, 30]


def test_count_capped_at_capacity():
    w = window_new(4)
    for v in [1, 2, 3, 4, 5, 6]:
        w.push(v)
    assert len(w) == 4
    assert w.contents() == [3, 4, 5, 6]


def test_push_range_checked():
    w = window_new(2)
    with pytest.raises(ValueError):
        w.push(0)
    with pytest.raises(ValueError):
        w.push(128)


@given(st.lists(st.integers(min_value=1, max_value=127), max_size=200),
       st.integers(min_value=1, max_value=16))
@settings(max_examples=200)
def test_running_sum_matches_brute_force(values, tau):
    w = window_new(tau)
    for v in values:
        w.push(v)
    tail = values[-min(len(values), tau):]
    assert w.sum == sum(tail)
    assert w.contents() == tail


def test_compute_factor_worked_example():
    user = window_new(4)
    for v in [10, 21, 32, 5]:
        user.push(v)
    comp = window_new(5)
    for v in [54, 65, 30, 58, 91]:
        comp.push(v)
    factor, degenerate = compute_factor(user.average, comp.average)
    assert not degenerate
    assert factor == Fraction(17) / Fraction(298, 5)
    assert abs(float(factor) - 0.2852) < 1e-3


def test_compute_factor_identity_and_empty():
    assert compute_factor(Fraction(50), Fraction(50)) == (1, False)
    factor, degenerate = compute_factor(None, Fraction(50))
    assert factor == 1 and degenerate
    factor, degenerate = compute_factor(Fraction(50), None)
    assert factor == 1 and degenerate


def test_rescale_paper_table():
    assert [rescale(v, 0.29) for v in [54, 65, 30, 58, 91]] == [16, 19, 9, 17, 26]


def test_rescale_exact_ratio_differs_at_first_value():
    exact = Fraction(17) / Fraction(298, 5)
    assert [rescale(v, exact) for v in [54, 65, 30, 58, 91]] == [15, 19, 9, 17, 26]


def test_rescale_identity_clamp_and_errors():
    for v in (1, 64, 127):
        assert rescale(v, 1.0) == v
    assert rescale(127, 10.0) == 127
    assert rescale(1, 0.001) == 1
    with pytest.raises(ValueError):
        rescale(64, 0)
    with pytest.raises(ValueError):
        rescale(64, -1.5)


def test_rescale_round_half_up():
    assert rescale(10, Fraction(1, 4)) == 3  # 2.5 rounds up
    assert rescale(10, Fraction(51, 100)) == 5  # 5.1 floors


@given(st.integers(min_value=1, max_value=127), st.integers(min_value=1, max_value=127))
def test_rescale_monotone_in_intensity(a, b):
    f = Fraction(3, 7)
    lo, hi = sorted((a, b))
    assert rescale(lo, f) <= rescale(hi, f)


def test_resize_keeps_most_recent():
    w = window_new(6)
    for v in [10, 20, 30, 40, 50]:
        w.push(v)
    w.resize(3)
    assert w.contents() == [30, 40, 50]
    assert w.sum == 120
    w.resize(5)
    w.push(60)
    assert w.contents() == [30, 40, 50, 60]
