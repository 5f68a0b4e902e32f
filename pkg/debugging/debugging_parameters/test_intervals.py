"""
Tests for parameter_space/intervals.py
"""

import math

from parameter_space.intervals import UNIT_INTERVAL, Interval


def test_open_and_closed_membership():
    assert Interval.open(0.0, 1.0).contains(0.5)
    assert not Interval.open(0.0, 1.0).contains(0.0)
    assert UNIT_INTERVAL.contains(0.0) and UNIT_INTERVAL.contains(1.0)


def test_degenerate_intervals():
    assert Interval.open(1.0, 1.0).is_empty()
    assert not Interval.closed(1.0, 1.0).is_empty()
    assert Interval.closed(2.0, 1.0).is_empty()
    assert Interval.empty().is_empty()


def test_intersection_keeps_the_tighter_endpoint():
    result = UNIT_INTERVAL.intersect(Interval.open(0.5, 1.0))
    assert result == Interval(0.5, 1.0, False, False)
    result = UNIT_INTERVAL.intersect(Interval.open(-1.0, 2.0))
    assert result == UNIT_INTERVAL


def test_disjoint_intersection_is_empty():
    result = Interval.open(0.0, 1.0).intersect(Interval.open(1.0, 2.0))
    assert result.is_empty()
    assert math.isnan(result.midpoint())
    assert result.length() == 0.0
    assert all(math.isnan(v) for v in result.bounds())


def test_str():
    assert str(Interval(0.0, 1.0, True, False)) == "[0, 1)"
    assert str(Interval.empty()) == "empty"
