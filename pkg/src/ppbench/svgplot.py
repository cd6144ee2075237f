"""Deterministic SVG rendering of probability paper.

The output is assembled from explicitly ordered strings with fixed float
formatting, so the same PlotSpec always yields byte-identical SVG. That
makes plots testable with plain file comparison and keeps version-control
diffs meaningful.

Geometry: the horizontal axis carries the reduced variate, the left axis
the observed (or transformed) values, and a secondary scale along the top
edge labels the reduced variate with cumulative probabilities through the
family's CDF. Observations are drawn as circle markers, the fitted line as
a single clipped segment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple
from xml.sax.saxutils import escape

from .distributions import canonical_family, reduced_quantile

DEFAULT_PROB_TICKS = (0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99)

_W, _H = 640.0, 440.0
_L, _R, _T, _B = 70.0, 30.0, 56.0, 50.0  # margins


@dataclass(frozen=True)
class PlotSpec:
    """Everything needed to draw one probability-paper chart.

    points are (reduced_variate, value) pairs; they are stored sorted by the
    reduced variate. fitted_line is an optional (intercept, slope) pair in
    value = intercept + slope * reduced_variate form.
    """

    title: str
    family: str
    points: Tuple[Tuple[float, float], ...]
    fitted_line: Optional[Tuple[float, float]] = None
    prob_ticks: Sequence[float] = DEFAULT_PROB_TICKS
    x_label: str = "reduced variate"
    y_label: str = "observed value"

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", canonical_family(self.family))
        pts = tuple(sorted((float(y), float(x)) for y, x in self.points))
        object.__setattr__(self, "points", pts)
        ticks = tuple(float(t) for t in self.prob_ticks)
        if any(t <= 0.0 or t >= 1.0 for t in ticks):
            raise ValueError("probability ticks must lie strictly inside (0, 1)")
        object.__setattr__(self, "prob_ticks", ticks)
        if self.fitted_line is not None:
            a, b = self.fitted_line
            object.__setattr__(self, "fitted_line", (float(a), float(b)))


def _fmt(v: float) -> str:
    # fixed two-decimal pixel coordinates keep output byte-stable
    return "%.2f" % v


def _fmt_num(v: float) -> str:
    out = "%.6g" % v
    return "0" if out == "-0" else out


def _nice_ticks(lo: float, hi: float, target: int = 6) -> list[float]:
    if hi <= lo:
        return [lo]
    raw = (hi - lo) / max(target - 1, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    for mult in (1.0, 2.0, 2.5, 5.0, 10.0):
        step = mult * mag
        if step >= raw:
            break
    first = math.ceil(lo / step) * step
    ticks = []
    t = first
    while t <= hi + 1e-12 * step:
        ticks.append(0.0 if abs(t) < 1e-12 * step else t)
        t += step
    return ticks


def emit_probability_paper(spec: PlotSpec, path: Optional[str] = None) -> str:
    """Render a PlotSpec to an SVG string; optionally write it to path."""
    if len(spec.points) < 2:
        raise ValueError("need at least two points to draw probability paper")

    zs = [p[0] for p in spec.points]
    xs = [p[1] for p in spec.points]
    tick_z = [float(reduced_quantile(spec.family, t)) for t in spec.prob_ticks]

    z_lo, z_hi = min(zs + tick_z), max(zs + tick_z)
    z_pad = 0.04 * (z_hi - z_lo) or 1.0
    z_lo, z_hi = z_lo - z_pad, z_hi + z_pad

    x_lo, x_hi = min(xs), max(xs)
    if spec.fitted_line is not None:
        a, b = spec.fitted_line
        x_lo = min(x_lo, a + b * z_lo, a + b * z_hi)
        x_hi = max(x_hi, a + b * z_lo, a + b * z_hi)
    x_pad = 0.06 * (x_hi - x_lo) or 1.0
    x_lo, x_hi = x_lo - x_pad, x_hi + x_pad

    px0, px1 = _L, _W - _R
    py0, py1 = _T, _H - _B

    def sx(z: float) -> float:
        return px0 + (z - z_lo) / (z_hi - z_lo) * (px1 - px0)

    def sy(x: float) -> float:
        return py1 - (x - x_lo) / (x_hi - x_lo) * (py1 - py0)

    parts = []
    parts.append(
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (int(_W), int(_H), int(_W), int(_H))
    )
    parts.append('<rect width="%d" height="%d" fill="white"/>' % (int(_W), int(_H)))
    parts.append(
        '<text x="%s" y="22" font-family="sans-serif" font-size="14" '
        'text-anchor="middle">%s</text>' % (_fmt((px0 + px1) / 2), escape(spec.title))
    )
    parts.append(
        '<rect x="%s" y="%s" width="%s" height="%s" fill="none" '
        'stroke="black" stroke-width="1"/>'
        % (_fmt(px0), _fmt(py0), _fmt(px1 - px0), _fmt(py1 - py0))
    )

    # probability scale along the top edge, dotted guides down the panel
    for t, z in zip(spec.prob_ticks, tick_z):
        X = sx(z)
        parts.append(
            '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="silver" '
            'stroke-width="0.5" stroke-dasharray="2,3"/>'
            % (_fmt(X), _fmt(py0), _fmt(X), _fmt(py1))
        )
        parts.append(
            '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="black" stroke-width="1"/>'
            % (_fmt(X), _fmt(py0 - 4), _fmt(X), _fmt(py0))
        )
        parts.append(
            '<text x="%s" y="%s" font-family="sans-serif" font-size="9" '
            'text-anchor="middle">%s</text>' % (_fmt(X), _fmt(py0 - 7), _fmt_num(t))
        )

    for z in _nice_ticks(z_lo, z_hi):
        X = sx(z)
        parts.append(
            '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="black" stroke-width="1"/>'
            % (_fmt(X), _fmt(py1), _fmt(X), _fmt(py1 + 4))
        )
        parts.append(
            '<text x="%s" y="%s" font-family="sans-serif" font-size="10" '
            'text-anchor="middle">%s</text>' % (_fmt(X), _fmt(py1 + 16), _fmt_num(z))
        )

    for x in _nice_ticks(x_lo, x_hi):
        Y = sy(x)
        parts.append(
            '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="black" stroke-width="1"/>'
            % (_fmt(px0 - 4), _fmt(Y), _fmt(px0), _fmt(Y))
        )
        parts.append(
            '<text x="%s" y="%s" font-family="sans-serif" font-size="10" '
            'text-anchor="end">%s</text>' % (_fmt(px0 - 7), _fmt(Y + 3), _fmt_num(x))
        )

    parts.append(
        '<text x="%s" y="%s" font-family="sans-serif" font-size="11" '
        'text-anchor="middle">%s</text>'
        % (_fmt((px0 + px1) / 2), _fmt(py1 + 34), escape(spec.x_label))
    )
    parts.append(
        '<text x="16" y="%s" font-family="sans-serif" font-size="11" '
        'text-anchor="middle" transform="rotate(-90 16 %s)">%s</text>'
        % (_fmt((py0 + py1) / 2), _fmt((py0 + py1) / 2), escape(spec.y_label))
    )
    parts.append(
        '<text x="%s" y="%s" font-family="sans-serif" font-size="9" '
        'text-anchor="start">cumulative probability (%s)</text>'
        % (_fmt(px0), _fmt(py0 - 22), escape(spec.family))
    )

    if spec.fitted_line is not None:
        a, b = spec.fitted_line
        parts.append(
            '<line class="fit" x1="%s" y1="%s" x2="%s" y2="%s" '
            'stroke="crimson" stroke-width="1.5"/>'
            % (_fmt(sx(z_lo)), _fmt(sy(a + b * z_lo)), _fmt(sx(z_hi)), _fmt(sy(a + b * z_hi)))
        )

    for z, x in spec.points:
        parts.append(
            '<circle class="marker" cx="%s" cy="%s" r="3" fill="none" '
            'stroke="navy" stroke-width="1.2"/>' % (_fmt(sx(z)), _fmt(sy(x)))
        )

    parts.append("</svg>")
    svg = "\n".join(parts) + "\n"
    if path is not None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    return svg
