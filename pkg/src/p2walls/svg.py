"""Pure-string SVG rendering of a wall diagram; no graphics dependency.

The viewport covers s in [center - 1.5*rho, mu + 0.5] with the vertical
wall always drawn.  Semicircles are sampled as polylines so the output is
trivially deterministic: all coordinates are formatted with a fixed number
of decimals from exact values converted at the very end.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .chern import ChernChar
from .walls import GiesekerReport

_ARC_SAMPLES = 96


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def wall_diagram(xi: ChernChar, report: GiesekerReport, interior: int = 3) -> str:
    """An SVG document showing the s-axis, the vertical wall s = mu, the
    largest actual wall, and `interior` nested smaller potential walls."""
    mu = float(xi.mu)
    two_disc = 2.0 * float(xi.disc)
    center = float(report.wall.center)
    rho = math.sqrt(float(report.wall.radius_sq))

    s_min = center - 1.5 * rho
    s_max = mu + 0.5
    t_max = 1.15 * rho

    width = 720.0
    margin = 36.0
    scale = (width - 2 * margin) / (s_max - s_min)
    height = t_max * scale + 2 * margin

    def x(s: float) -> float:
        return margin + (s - s_min) * scale

    def y(t: float) -> float:
        return height - margin - t * scale

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect x="0" y="0" width="{_fmt(width)}" height="{_fmt(height)}" fill="white"/>',
        f'<line x1="{_fmt(x(s_min))}" y1="{_fmt(y(0.0))}" x2="{_fmt(x(s_max))}" '
        f'y2="{_fmt(y(0.0))}" stroke="black" stroke-width="1"/>',
        f'<line x1="{_fmt(x(mu))}" y1="{_fmt(y(0.0))}" x2="{_fmt(x(mu))}" '
        f'y2="{_fmt(margin)}" stroke="black" stroke-width="1" stroke-dasharray="6 4"/>',
    ]

    def semicircle(c: float, r: float, stroke: str, stroke_width: str) -> str:
        pts = []
        for i in range(_ARC_SAMPLES + 1):
            theta = math.pi * i / _ARC_SAMPLES
            pts.append(f"{_fmt(x(c - r * math.cos(theta)))},{_fmt(y(r * math.sin(theta)))}")
        return (
            f'<polyline points="{" ".join(pts)}" fill="none" '
            f'stroke="{stroke}" stroke-width="{stroke_width}"/>'
        )

    parts.append(semicircle(center, rho, "#b22222", "2"))

    # nested interior walls of the same foliation, centers toward the collapse point
    collapse = mu - math.sqrt(two_disc)
    for i in range(1, interior + 1):
        c = center + (collapse - center) * i / (interior + 1)
        radius_sq = (c - mu) ** 2 - two_disc
        if radius_sq <= 0:
            continue
        parts.append(semicircle(c, math.sqrt(radius_sq), "#888888", "1"))

    parts.append(
        f'<text x="{_fmt(x(mu) + 4)}" y="{_fmt(margin + 12)}" '
        f'font-family="monospace" font-size="12">s = {xi.mu}</text>'
    )
    parts.append(
        f'<text x="{_fmt(margin)}" y="{_fmt(margin - 10)}" font-family="monospace" '
        f'font-size="12">wall diagram for {xi.invariant_str()} '
        f'(center {report.wall.center}, radius^2 {report.wall.radius_sq})</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
