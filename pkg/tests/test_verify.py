"""Cross-validation suite wiring."""

from __future__ import annotations

import pytest

from ginlab import (PointConfig, brute_force_exceptional_classes,
                    exceptional_classes, run_verification)


@pytest.mark.parametrize("r,count", [(2, 3), (3, 6), (4, 10), (5, 16), (6, 27)])
def test_brute_force_counts(r, count):
    classes = brute_force_exceptional_classes(r)
    assert len(classes) == count
    assert classes == exceptional_classes(PointConfig.general(r))


@pytest.mark.parametrize("spec,max_m", [
    ("general:2", 10),
    ("general:6", 10),
    ("shgh:9", 10),
    ("collinear:3", 12),
])
def test_run_verification_passes(spec, max_m):
    report = run_verification(PointConfig.parse(spec), max_m=max_m)
    assert report.passed
    assert report.failures == ()
    assert all(check.detail for check in report.checks)


def test_check_names_by_kind():
    names = [c.name for c in run_verification(PointConfig.general(2), max_m=4).checks]
    assert names == ["class-list", "colength", "nef-range-agreement",
                     "first-differences", "convergence", "graded-system"]
    names = [c.name for c in run_verification(PointConfig.shgh(9), max_m=4).checks]
    assert names == ["colength", "closed-form", "first-differences",
                     "convergence", "graded-system"]
    names = [c.name for c in run_verification(PointConfig.collinear_plus_one(3), max_m=6).checks]
    assert names == ["class-list", "colength", "first-differences",
                     "collinear-degrees", "graded-system"]


def test_run_verification_rejects_bad_max_m():
    with pytest.raises(ValueError):
        run_verification(PointConfig.general(2), max_m=0)
