"""Scaled staircase geometry, limiting intercepts, and convergence checks."""

from __future__ import annotations

from fractions import Fraction

import pytest

from ginlab import (PointConfig, SquareRootIntercept, check_convergence,
                    collinear_shape_check, divisibility_step, gin_staircase,
                    scaled_staircases_nested, shape_report, theoretical_shape,
                    within)
from ginlab.errors import UnsupportedConfigError

F = Fraction


def test_theoretical_shape_table():
    expected = {
        2: (F(1), F(2)),
        3: (F(3, 2), F(2)),
        4: (F(2), F(2)),
        5: (F(2), F(5, 2)),
        6: (F(12, 5), F(5, 2)),
        7: (F(21, 8), F(8, 3)),
        8: (F(48, 17), F(17, 6)),
    }
    for r, pair in expected.items():
        assert theoretical_shape(PointConfig.general(r)) == pair
        assert pair[0] * pair[1] == r
    for r in (9, 10, 16):
        g1, g2 = theoretical_shape(PointConfig.shgh(r))
        assert g1 == SquareRootIntercept(r)
        assert g2 == SquareRootIntercept(r)


def test_theoretical_shape_rejects_collinear():
    with pytest.raises(UnsupportedConfigError):
        theoretical_shape(PointConfig.collinear_plus_one(3))


def test_square_root_intercept():
    nine = SquareRootIntercept(9)
    assert nine.is_rational
    assert nine.as_fraction() == 3
    assert str(nine) == "sqrt(9)"
    ten = SquareRootIntercept(10)
    assert not ten.is_rational
    with pytest.raises(ValueError):
        ten.as_fraction()
    assert 3.16 < float(ten) < 3.17


def test_within_rational_target():
    assert within(F(5, 2), F(5, 2), F(0))
    assert within(F(24, 10), F(5, 2), F(1, 10))
    assert not within(F(24, 10), F(5, 2), F(1, 11))


def test_within_root_target_squares_exactly():
    ten = SquareRootIntercept(10)
    assert within(F(3), ten, F(1, 5))       # sqrt(10) - 3 ~ 0.1623
    assert not within(F(3), ten, F(1, 10))
    assert within(F(3), SquareRootIntercept(9), F(0))
    assert not within(F(3), SquareRootIntercept(9), F(-1))
    assert within(F(0), SquareRootIntercept(4), F(2))
    assert not within(F(0), SquareRootIntercept(4), F(1))


def test_shape_report_general_six():
    report = shape_report(PointConfig.general(6), [10])
    assert report.predicted == (F(12, 5), F(5, 2))
    assert not report.conjectural
    (e,) = report.entries
    assert (e.alpha, e.zeta, e.colength) == (24, 26, 330)
    assert e.x_intercept == F(12, 5)
    assert e.y_intercept == F(13, 5)
    assert e.colength_over_m2 == F(33, 10)
    assert e.corners[0] == (F(0), F(13, 5))
    assert e.corners[-1] == (F(12, 5), F(0))
    xs = [x for x, _ in e.corners]
    assert xs == sorted(xs)
    assert report.seshadri_estimate == F(24, 60)


def test_shape_report_interpolation_nine():
    report = shape_report(PointConfig.shgh(9), [5])
    assert report.conjectural
    (e,) = report.entries
    assert e.x_intercept == F(3)
    assert e.colength == 135
    assert e.colength_over_m2 == F(27, 5)


def test_shape_report_collinear_has_no_predicted_segment():
    report = shape_report(PointConfig.collinear_plus_one(3), [6])
    assert report.predicted is None


def test_shape_report_sorts_and_dedupes():
    report = shape_report(PointConfig.general(2), [4, 2, 4])
    assert tuple(e.m for e in report.entries) == (2, 4)


def test_shape_report_rejects_bad_input():
    config = PointConfig.general(2)
    with pytest.raises(ValueError):
        shape_report(config, [])
    with pytest.raises(ValueError):
        shape_report(config, [0, 3])


def test_divisibility_steps():
    assert divisibility_step(PointConfig.general(6)) == 10
    assert divisibility_step(PointConfig.general(7)) == 24
    assert divisibility_step(PointConfig.general(8)) == 102
    assert divisibility_step(PointConfig.general(3)) == 1
    assert divisibility_step(PointConfig.shgh(9)) == 1
    assert divisibility_step(PointConfig.collinear_plus_one(4)) == 12


def test_convergence_general_six():
    report = check_convergence(PointConfig.general(6), list(range(10, 51, 10)))
    assert report.passed
    first = report.entries[0]
    assert first.x_intercept == F(12, 5)          # exact on the sequence
    assert first.y_intercept - F(5, 2) == F(1, 10)  # off by exactly 1/m


def test_convergence_general_seven_and_interpolated():
    assert check_convergence(PointConfig.general(7), [24, 48]).passed
    report = check_convergence(PointConfig.shgh(9), [10, 20])
    assert report.passed
    assert report.entries[0].x_intercept == F(3)


def test_convergence_rejects_off_sequence_multiplicity():
    with pytest.raises(ValueError):
        check_convergence(PointConfig.general(6), [10, 15])
    with pytest.raises(UnsupportedConfigError):
        check_convergence(PointConfig.collinear_plus_one(3), [6])


def test_collinear_shape_check():
    report = collinear_shape_check(3, [6, 12])
    assert report.passed
    assert report.expected_x == F(5, 3)
    assert report.expected_y == F(3)
    assert report.limit_area == F(2)
    assert report.single_segment_area == F(5, 2)
    assert report.single_segment_excluded
    assert report.entries[0].colength_over_m2 == F(4 * 7, 12)


def test_collinear_shape_check_rejects_off_sequence():
    with pytest.raises(ValueError):
        collinear_shape_check(3, [5])


def test_scaled_staircases_nested():
    config = PointConfig.general(6)
    small = gin_staircase(config, 5)
    big = gin_staircase(config, 10)
    assert scaled_staircases_nested(small, big)
    assert scaled_staircases_nested(small, small)
    with pytest.raises(ValueError):
        scaled_staircases_nested(gin_staircase(config, 4), gin_staircase(config, 10))
