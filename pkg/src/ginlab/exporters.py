"""Byte-reproducible serialization of staircases and shape reports.

Identical inputs must produce identical bytes, so every emitter walks its
data in a fixed order and formats numbers through a single code path.
Rationals are written as "num/den"; file payloads end with one newline.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .shape import Intercept, ShapeReport, SquareRootIntercept
from .staircase import MonomialStaircase, colength


def rational_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def intercept_str(value: Intercept) -> str:
    if isinstance(value, SquareRootIntercept):
        return str(value)
    return rational_str(value)


def staircase_payload(s: MonomialStaircase) -> dict:
    """JSON-ready staircase with a stable field order."""
    return {
        "config": str(s.config),
        "m": s.m,
        "alpha": s.alpha,
        "lambdas": list(s.lambdas),
        "generators": [[x, y] for x, y in s.generators],
        "colength": colength(s),
        "conjectural": s.conjectural,
    }


def staircase_json(s: MonomialStaircase) -> str:
    return json.dumps(staircase_payload(s), indent=2)


def shape_payload(report: ShapeReport) -> dict:
    predicted = None
    if report.predicted is not None:
        predicted = [intercept_str(report.predicted[0]), intercept_str(report.predicted[1])]
    return {
        "config": str(report.config),
        "predicted_intercepts": predicted,
        "seshadri_estimate": rational_str(report.seshadri_estimate),
        "conjectural": report.conjectural,
        "entries": [
            {
                "m": e.m,
                "alpha": e.alpha,
                "zeta": e.zeta,
                "colength": e.colength,
                "x_intercept": rational_str(e.x_intercept),
                "y_intercept": rational_str(e.y_intercept),
                "colength_over_m2": rational_str(e.colength_over_m2),
                "corners": [[rational_str(x), rational_str(y)] for x, y in e.corners],
            }
            for e in report.entries
        ],
    }


def shape_json(report: ShapeReport) -> str:
    return json.dumps(shape_payload(report), indent=2)


def shape_csv(report: ShapeReport) -> str:
    lines = ["m,alpha,zeta,x_intercept,y_intercept,colength"]
    for e in report.entries:
        lines.append(",".join([
            str(e.m),
            str(e.alpha),
            str(e.zeta),
            rational_str(e.x_intercept),
            rational_str(e.y_intercept),
            str(e.colength),
        ]))
    return "\n".join(lines) + "\n"


_PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
            "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


def _fmt(value: float) -> str:
    return f"{value:.4f}".rstrip("0").rstrip(".")


def _staircase_outline(entry) -> list[tuple[float, float]]:
    """Step-function boundary of the scaled ideal region, left to right."""
    corners = entry.corners  # ascending x, starts (0, zeta/m), ends (alpha/m, 0)
    points: list[tuple[float, float]] = []
    for (x0, y0), (x1, y1) in zip(corners, corners[1:]):
        points.append((float(x0), float(y0)))
        points.append((float(x1), float(y0)))
    points.append((float(corners[-1][0]), float(corners[-1][1])))
    return points


def shape_svg(report: ShapeReport, unit: float = 120.0, pad: float = 40.0) -> str:
    """Scaled staircases for every multiplicity plus the predicted segment."""
    max_x = max(float(e.x_intercept) for e in report.entries)
    max_y = max(float(e.y_intercept) for e in report.entries)
    if report.predicted is not None:
        max_x = max(max_x, float(report.predicted[0]))
        max_y = max(max_y, float(report.predicted[1]))
    width = 2 * pad + unit * max_x
    height = 2 * pad + unit * max_y

    def tx(x: float) -> float:
        return pad + unit * x

    def ty(y: float) -> float:
        return height - pad - unit * y

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'  <line x1="{_fmt(tx(0))}" y1="{_fmt(ty(0))}" x2="{_fmt(tx(max_x))}" '
        f'y2="{_fmt(ty(0))}" stroke="#999" stroke-width="1"/>',
        f'  <line x1="{_fmt(tx(0))}" y1="{_fmt(ty(0))}" x2="{_fmt(tx(0))}" '
        f'y2="{_fmt(ty(max_y))}" stroke="#999" stroke-width="1"/>',
    ]
    for idx, entry in enumerate(report.entries):
        color = _PALETTE[idx % len(_PALETTE)]
        pts = " ".join(f"{_fmt(tx(x))},{_fmt(ty(y))}" for x, y in _staircase_outline(entry))
        parts.append(f'  <polyline fill="none" stroke="{color}" stroke-width="1.5" '
                     f'points="{pts}"/>')
        parts.append(f'  <text x="{_fmt(tx(0) + 4)}" y="{_fmt(ty(float(entry.y_intercept)) - 4 - 12 * idx)}" '
                     f'font-size="12" fill="{color}">m={entry.m}</text>')
    if report.predicted is not None:
        g1, g2 = report.predicted
        parts.append(f'  <line x1="{_fmt(tx(float(g1)))}" y1="{_fmt(ty(0))}" '
                     f'x2="{_fmt(tx(0))}" y2="{_fmt(ty(float(g2)))}" '
                     f'stroke="#000" stroke-width="1.5" stroke-dasharray="6 3"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def hilbert_csv(rows: list[tuple[int, int]]) -> str:
    lines = ["t,hilbert"]
    for t, value in rows:
        lines.append(f"{t},{value}")
    return "\n".join(lines) + "\n"
