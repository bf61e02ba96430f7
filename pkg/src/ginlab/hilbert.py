"""Hilbert functions of uniform fat-point ideals.

For up to 8 general points (and the collinear-plus-one arrangement) the value
in degree t is the section count of the class (t; m, ..., m) on the blow-up.
From 9 points on, the conjectural interpolation count takes over.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

from .errors import ComputationGuardError
from .lattice import SHGH, DivisorClass, PointConfig, exceptional_classes, h0

def shgh_hilbert(r: int, m: int, t: int) -> int:
    """Conjectural Hilbert function for r >= 9 general points.

    The naive count of interpolation conditions, clamped at zero; for 9 or
    more general uniform points no special linear systems are expected.
    Every value of this engine is conjectural.
    """
    if r < 9:
        raise ValueError("interpolation count is reserved for r >= 9; use the divisor engine")
    if m < 0:
        raise ValueError("multiplicity must be nonnegative")
    if t < 0:
        return 0
    return max(comb(t + 2, 2) - r * comb(m + 1, 2), 0)

def alpha_shgh(r: int, m: int) -> int:
    """Least degree with a positive conjectural Hilbert value.

    Computed as floor(-1/2 + sqrt(1/4 + r*m*(m+1))) using integer square
    roots only: the floor equals the largest j with (2j+1)^2 <= 4*r*m*(m+1)+1.
    """
    if r < 9:
        raise ValueError("interpolation count is reserved for r >= 9")
    if m < 0:
        raise ValueError("multiplicity must be nonnegative")
    return (isqrt(4 * r * m * (m + 1) + 1) - 1) // 2

def nef_threshold(config: PointConfig, m: int) -> int:
    """Smallest N making (t; m, ..., m) nef for every t >= N."""
    if m < 0:
        raise ValueError("multiplicity must be nonnegative")
    best = 0
    for c in exceptional_classes(config):
        if c.d > 0:
            s = sum(c.mults)
            if s > 0:
                best = max(best, -(-m * s // c.d))
    return best

@lru_cache(maxsize=None)
def hilbert_fn(config: PointConfig, m: int, t: int) -> int:
    """Hilbert function of the multiplicity-m uniform fat-point ideal.

    Values for the shgh kind inherit the conjectural flag from the
    configuration; serialized reports carry it explicitly.
    """
    if m < 0:
        raise ValueError("multiplicity must be nonnegative")
    if t < 0:
        return 0
    if config.kind == SHGH:
        return shgh_hilbert(config.r, m, t)
    return h0(DivisorClass.uniform(t, m, config.r), config)

@lru_cache(maxsize=None)
def _nef_ratio(config: PointConfig) -> Fraction:
    """Largest (sum of multiplicities)/degree over positive-degree curves."""
    best = Fraction(0)
    for c in exceptional_classes(config):
        if c.d > 0:
            best = max(best, Fraction(sum(c.mults), c.d))
    return best

def _scan_start(config: PointConfig, m: int) -> int:
    """Sound lower bound for the first positive degree.

    With ratio p/q in lowest terms, the class (p; q, ..., q) is nef, so any
    effective (t; m, ..., m) must meet it nonnegatively: t >= m*q*r/p.
    """
    if config.kind == SHGH:
        return 0
    ratio = _nef_ratio(config)
    if ratio <= 0:
        return 0
    p, q = ratio.numerator, ratio.denominator
    return max(0, -(-m * q * config.r // p))

def alpha(config: PointConfig, m: int) -> int:
    """Least degree whose Hilbert value is positive.

    Scans upward from the certified lower bound; a scan past
    ceil(m*sqrt(r)) + m + 3 means the engine is broken and raises instead
    of returning a wrong answer.
    """
    if m < 1:
        raise ValueError("multiplicity must be positive")
    r = config.r
    guard = _ceil_sqrt(r * m * m) + m + 3
    t = _scan_start(config, m)
    while t <= guard:
        if hilbert_fn(config, m, t) > 0:
            if config.kind == SHGH and t != alpha_shgh(r, m):
                raise ComputationGuardError(
                    f"scan found degree {t} but the closed form gives {alpha_shgh(r, m)}")
            return t
        t += 1
    raise ComputationGuardError(f"no positive Hilbert value up to degree {guard} for {config}, m={m}")

def _ceil_sqrt(n: int) -> int:
    root = isqrt(n)
    return root if root * root == n else root + 1
