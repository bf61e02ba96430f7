"""Staircase reconstruction from Hilbert data and its closed form."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ginlab import (MonomialStaircase, PointConfig, colength, gin_staircase,
                    graded_products_contained, shgh_gin_closed_form, xy_count)
from ginlab.errors import ComputationGuardError


# Oracle: count the complement by walking the grid, independently of the
# column-sum shortcut inside colength().
def grid_complement_count(s: MonomialStaircase) -> int:
    top = s.lambdas[0] if s.lambdas else 1
    return sum(1
               for x in range(0, s.alpha)
               for y in range(0, top)
               if not s.contains(x, y))


def test_xy_count_anchors():
    g6 = PointConfig.general(6)
    assert xy_count(g6, 10, 24) == 1
    assert xy_count(g6, 10, 25) == 20
    assert xy_count(g6, 10, 26) == 27
    assert xy_count(g6, 10, 5) == 0


def test_staircase_r6_m10_frozen():
    s = gin_staircase(PointConfig.general(6), 10)
    assert s.alpha == 24
    assert s.zeta == 26
    expected = tuple(26 - i for i in range(6)) + tuple(25 - i for i in range(6, 24))
    assert s.lambdas == expected
    assert len(s.generators) == s.alpha + 1
    assert s.min_generator_degree == 24
    assert s.max_generator_degree == 26
    assert colength(s) == 330
    assert not s.conjectural


def test_staircase_two_points_multiplicity_one():
    s = gin_staircase(PointConfig.general(2), 1)
    assert s.generators == ((1, 0), (0, 2))
    assert colength(s) == 2


def test_staircase_collinear_frozen():
    s = gin_staircase(PointConfig.collinear_plus_one(3), 6)
    assert s.alpha == 10
    assert s.zeta == 18
    assert s.lambdas == (18, 15, 12, 9, 8, 7, 6, 4, 3, 2)
    assert colength(s) == 84


def test_closed_form_two_degree_case():
    s = shgh_gin_closed_form(9, 1)
    assert s.generators == ((3, 0), (2, 2), (1, 3), (0, 4))
    assert s.conjectural
    s = shgh_gin_closed_form(9, 5)
    assert s.alpha == 15
    assert s.lambdas == tuple(16 - i for i in range(15))
    assert colength(s) == 135


def test_closed_form_single_degree_case():
    # r*m*(m+1) = alpha*(alpha+1) makes every generator sit in degree alpha
    s = shgh_gin_closed_form(15, 1)
    assert s.alpha == 5
    assert s.lambdas == (5, 4, 3, 2, 1)
    assert {x + y for x, y in s.generators} == {5}
    s = shgh_gin_closed_form(12, 2)
    assert s.alpha == 8
    assert s.lambdas == (8, 7, 6, 5, 4, 3, 2, 1)
    assert {x + y for x, y in s.generators} == {8}


@pytest.mark.parametrize("r", range(9, 17))
def test_closed_form_equals_reconstruction(r):
    config = PointConfig.shgh(r)
    for m in range(1, 13):
        assert shgh_gin_closed_form(r, m) == gin_staircase(config, m)


@pytest.mark.parametrize("spec", ["general:2", "general:5", "general:8",
                                  "shgh:9", "collinear:3", "collinear:5"])
def test_colength_identity_and_grid_oracle(spec):
    config = PointConfig.parse(spec)
    for m in range(1, 11):
        s = gin_staircase(config, m)
        expected = config.r * m * (m + 1) // 2
        assert colength(s) == expected
        assert grid_complement_count(s) == expected


def test_generator_degrees_weakly_decrease_with_x():
    # Borel-fixedness in two variables: i + lambdas[i] is nonincreasing in i
    for spec, m in (("general:6", 10), ("general:7", 24), ("collinear:4", 12)):
        s = gin_staircase(PointConfig.parse(spec), m)
        degs = [x + y for x, y in s.generators]  # descending x order
        assert degs == sorted(degs)


def test_contains_membership():
    s = gin_staircase(PointConfig.general(2), 1)  # generators x, y^2
    assert s.contains(1, 0)
    assert s.contains(5, 3)
    assert s.contains(0, 2)
    assert not s.contains(0, 1)
    assert not s.contains(0, 0)
    assert not s.contains(-1, 4)


def test_staircase_validation_rejects_bad_profiles():
    config = PointConfig.general(2)
    with pytest.raises(ComputationGuardError):
        MonomialStaircase(alpha=2, lambdas=(2, 2), m=1, config=config)
    with pytest.raises(ComputationGuardError):
        MonomialStaircase(alpha=2, lambdas=(2, 0), m=1, config=config)
    with pytest.raises(ComputationGuardError):
        MonomialStaircase(alpha=2, lambdas=(3,), m=1, config=config)


def test_gin_staircase_rejects_nonpositive_m():
    with pytest.raises(ValueError):
        gin_staircase(PointConfig.general(6), 0)


def test_staircase_cache_returns_same_object():
    a = gin_staircase(PointConfig.general(6), 10)
    b = gin_staircase(PointConfig.general(6), 10)
    assert a is b


@given(st.sampled_from(["general:3", "general:6", "shgh:9", "collinear:3"]),
       st.integers(1, 12))
@settings(max_examples=40, deadline=None)
def test_graded_products_contained_property(spec, m):
    config = PointConfig.parse(spec)
    small = gin_staircase(config, m)
    big = gin_staircase(config, 2 * m)
    assert graded_products_contained(small, big)


def test_graded_products_requires_doubled_multiplicity():
    config = PointConfig.general(6)
    with pytest.raises(ValueError):
        graded_products_contained(gin_staircase(config, 2), gin_staircase(config, 3))
