"""SVG rendering of points, lines, circles, conics and triangles.

Rendering is in floats and makes no exactness claim.  The viewBox is fitted
to the bounded items (points, triangles, circles, ellipses) with a 5%
margin; unbounded items (lines, hyperbola and parabola branches) are clipped
or sampled to cover that box.  World y points up, so every y coordinate is
negated on output.  Output is a pure function of the input.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence
from xml.sax.saxutils import escape, quoteattr

import numpy as np

from .errors import ArgumentTypeError, EmptyDrawList
from .geom import Circle, Conic, Line, Point, Triangle

SEGMENTS = 256
MARGIN = 0.05

DEFAULT_COLORS = {
    "point": "#000000",
    "line": "#7f7f7f",
    "circle": "#1f77b4",
    "conic": "#2ca02c",
    "triangle": "#000000",
}


@dataclass(frozen=True)
class Options:
    width: int = 800
    precision: int = 4
    show_labels: bool = True


@dataclass
class _Box:
    x0: float
    y0: float
    x1: float
    y1: float

    @property
    def size(self) -> float:
        return max(self.x1 - self.x0, self.y1 - self.y0)

    def corners(self) -> list:
        return [(self.x0, self.y0), (self.x1, self.y0), (self.x1, self.y1), (self.x0, self.y1)]


def _fmt(v: float, prec: int) -> str:
    s = f"{v:.{prec}f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _xy(p: Point) -> tuple:
    return float(p.x), float(p.y)


def _kind(value) -> str:
    if isinstance(value, Point):
        return "point"
    if isinstance(value, Line):
        return "line"
    if isinstance(value, Circle):
        return "circle"
    if isinstance(value, Conic):
        return "conic"
    if isinstance(value, Triangle):
        return "triangle"
    raise ArgumentTypeError(f"cannot draw a {type(value).__name__}")


def _bounded_points(value) -> list:
    kind = _kind(value)
    if kind == "point":
        return [_xy(value)]
    if kind == "triangle":
        return [_xy(v) for v in value.vertices]
    if kind == "circle":
        cx, cy = _xy(value.center)
        r = math.sqrt(max(float(value.radius_sq), 0.0))
        return [(cx - r, cy - r), (cx + r, cy + r)]
    if kind == "conic":
        shape = _conic_shape(value)
        if shape and shape[0] == "ellipse":
            return [p for poly in _sample_conic(value, None) for p in poly]
    return []


def _fit(items: Sequence) -> _Box:
    pts = [p for value, _ in items for p in _bounded_points(value)]
    if not pts:
        pts = [(-1.0, -1.0), (1.0, 1.0)]
    xs, ys = [p[0] for p in pts], [p[1] for p in pts]
    box = _Box(min(xs), min(ys), max(xs), max(ys))
    span = box.size or 2.0
    cx, cy = (box.x0 + box.x1) / 2, (box.y0 + box.y1) / 2
    w, h = max(box.x1 - box.x0, 1e-9 * span), max(box.y1 - box.y0, 1e-9 * span)
    if box.x1 - box.x0 == 0 and box.y1 - box.y0 == 0:
        w = h = span
    m = MARGIN * max(w, h)
    return _Box(cx - w / 2 - m, cy - h / 2 - m, cx + w / 2 + m, cy + h / 2 + m)


def clip_line(line: Line, box: _Box) -> Optional[tuple]:
    """Segment of ``line`` inside ``box``, or None."""
    a, b, c = (float(v) for v in line.coefficients)
    hits = []
    if b != 0:
        for x in (box.x0, box.x1):
            y = -(a * x + c) / b
            if box.y0 - 1e-12 <= y <= box.y1 + 1e-12:
                hits.append((x, y))
    if a != 0:
        for y in (box.y0, box.y1):
            x = -(b * y + c) / a
            if box.x0 - 1e-12 <= x <= box.x1 + 1e-12:
                hits.append((x, y))
    if len(hits) < 2:
        return None
    # farthest pair along the direction
    d = (b, -a)
    hits.sort(key=lambda p: p[0] * d[0] + p[1] * d[1])
    return hits[0], hits[-1]


def _conic_shape(K: Conic):
    A, B, C, D, E, F = (float(v) for v in K.coefficients)
    Q = np.array([[A, B / 2], [B / 2, C]])
    lam, vec = np.linalg.eigh(Q)
    scale = max(abs(lam).max(), 1e-300)
    if min(abs(lam)) > 1e-12 * scale:
        center = np.linalg.solve(Q, -np.array([D, E]) / 2)
        f0 = float(center @ Q @ center + D * center[0] + E * center[1] + F)
        if lam[0] * lam[1] > 0:
            if -f0 / lam[0] <= 0:
                return None
            return ("ellipse", center, lam, vec, f0)
        return ("hyperbola", center, lam, vec, f0)
    return ("parabola", None, lam, vec, None)


def _sample_conic(K: Conic, box: Optional[_Box]) -> list:
    """Polylines in world coordinates, SEGMENTS segments per branch."""
    shape = _conic_shape(K)
    if shape is None:
        return []
    kind, center, lam, vec, f0 = shape
    e1, e2 = vec[:, 0], vec[:, 1]
    if kind == "ellipse":
        a, b = math.sqrt(-f0 / lam[0]), math.sqrt(-f0 / lam[1])
        ts = np.linspace(0.0, 2 * math.pi, SEGMENTS + 1)
        return [[tuple(center + a * math.cos(t) * e1 + b * math.sin(t) * e2) for t in ts]]
    reach = _reach(box, center)
    if kind == "hyperbola":
        if _is_line_pair(center, lam, f0):
            return []  # drawn as lines by the caller
        # put the transverse axis first
        if -f0 / lam[0] > 0:
            a, b, u, v = math.sqrt(-f0 / lam[0]), math.sqrt(f0 / lam[1]), e1, e2
        else:
            a, b, u, v = math.sqrt(-f0 / lam[1]), math.sqrt(f0 / lam[0]), e2, e1
        T = math.asinh(2 * reach / min(a, b)) if reach > 0 else 1.0
        ts = np.linspace(-T, T, SEGMENTS + 1)
        return [
            [tuple(center + sgn * a * math.cosh(t) * u + b * math.sinh(t) * v) for t in ts]
            for sgn in (1.0, -1.0)
        ]
    # parabola: lam[i] is the vanishing eigenvalue
    A, B, C, D, E, F = (float(x) for x in K.coefficients)
    i = int(np.argmax(abs(lam)))
    u, w = vec[:, i], vec[:, 1 - i]
    du, dw = D * u[0] + E * u[1], D * w[0] + E * w[1]
    if abs(dw) < 1e-12:
        return []
    s0 = -du / (2 * lam[i])
    ss = np.linspace(s0 - 2 * reach, s0 + 2 * reach, SEGMENTS + 1)
    return [[tuple(s * u - (lam[i] * s * s + du * s + F) / dw * w) for s in ss]]


def _reach(box: Optional[_Box], center) -> float:
    if box is None:
        return 1.0
    cx, cy = (0.0, 0.0) if center is None else (center[0], center[1])
    return max(math.hypot(x - cx, y - cy) for x, y in box.corners())


def _is_line_pair(center, lam, f0: float) -> bool:
    return abs(f0) <= 1e-9 * abs(lam).max() * (1.0 + float(center @ center))


def _degenerate_lines(K: Conic) -> list:
    """Real lines of a line-pair conic (center on the curve)."""
    shape = _conic_shape(K)
    if shape is None or shape[0] != "hyperbola":
        return []
    _, center, lam, vec, f0 = shape
    if not _is_line_pair(center, lam, f0):
        return []
    # lam0 u^2 + lam1 v^2 = 0 -> v = +-sqrt(-lam0/lam1) u
    r = math.sqrt(-lam[0] / lam[1])
    out = []
    for sgn in (1.0, -1.0):
        d = vec[:, 0] + sgn * r * vec[:, 1]
        out.append(Line(float(d[1]), float(-d[0]), float(d[0] * center[1] - d[1] * center[0])))
    return out


def _style(kind: str, style: dict, stroke_w: float, prec: int) -> str:
    color = style.get("color", DEFAULT_COLORS[kind])
    try:
        factor = float(style.get("width", 1))
    except ValueError:
        factor = 1.0
    w = _fmt(stroke_w * factor, prec + 2)
    attrs = [f"stroke={quoteattr(color)}", f'stroke-width="{w}"']
    if "dash" in style:
        attrs.append(f'stroke-dasharray="{w} {w}"')
    return " ".join(attrs)


def emit_svg(env: dict, draws: Iterable, options: Optional[Options] = None) -> str:
    """SVG 1.1 document for the named values in ``draws``.

    ``draws`` holds (name, style) pairs, or script draw statements.  Style
    keys: ``color``, ``width`` (stroke multiplier), ``label`` (``none``
    hides it), ``dash``.
    """
    opts = options or Options()
    items = []
    for d in draws:
        name, style = (d.name, dict(d.style)) if hasattr(d, "style") else (d[0], dict(d[1]))
        if name not in env:
            raise ArgumentTypeError(f"nothing named {name!r} to draw")
        _kind(env[name])
        items.append((env[name], dict(style, _name=name)))
    if not items:
        raise EmptyDrawList("nothing to draw")

    box = _fit(items)
    prec = opts.precision
    size = box.size
    sw = size / 400
    r_pt = size / 150
    font = size / 35
    W = opts.width
    H = max(1, round(W * (box.y1 - box.y0) / (box.x1 - box.x0)))

    def P(x: float, y: float) -> str:
        return f"{_fmt(x, prec)},{_fmt(-y, prec)}"

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" '
            f'viewBox="{_fmt(box.x0, prec)} {_fmt(-box.y1, prec)} {_fmt(box.x1 - box.x0, prec)} {_fmt(box.y1 - box.y0, prec)}">'
        ),
        f'<rect x="{_fmt(box.x0, prec)}" y="{_fmt(-box.y1, prec)}" width="{_fmt(box.x1 - box.x0, prec)}" '
        f'height="{_fmt(box.y1 - box.y0, prec)}" fill="#ffffff"/>',
        '<g fill="none" stroke-linecap="round" stroke-linejoin="round">',
    ]
    labels = []
    # shapes first, points on top
    ordered = [it for it in items if _kind(it[0]) != "point"] + [it for it in items if _kind(it[0]) == "point"]
    for value, style in ordered:
        kind = _kind(value)
        name = style["_name"]
        st = _style(kind, style, sw, prec)
        tag = f"data-name={quoteattr(name)}"
        if kind == "point":
            x, y = _xy(value)
            color = style.get("color", DEFAULT_COLORS["point"])
            out.append(
                f'<circle class="point" {tag} cx="{_fmt(x, prec)}" cy="{_fmt(-y, prec)}" '
                f'r="{_fmt(r_pt, prec)}" fill={quoteattr(color)} stroke="none"/>'
            )
            label = style.get("label", name)
            if opts.show_labels and label != "none":
                labels.append(
                    f'<text class="label" x="{_fmt(x + r_pt * 1.5, prec)}" y="{_fmt(-y - r_pt * 1.5, prec)}" '
                    f'font-size="{_fmt(font, prec)}" font-family="sans-serif" fill={quoteattr(color)}>{escape(label)}</text>'
                )
        elif kind == "line":
            seg = clip_line(value, box)
            if seg:
                (x0, y0), (x1, y1) = seg
                out.append(f'<polyline class="line" {tag} points="{P(x0, y0)} {P(x1, y1)}" {st}/>')
        elif kind == "circle":
            cx, cy = _xy(value.center)
            r = math.sqrt(max(float(value.radius_sq), 0.0))
            out.append(
                f'<circle class="circle" {tag} cx="{_fmt(cx, prec)}" cy="{_fmt(-cy, prec)}" r="{_fmt(r, prec)}" {st}/>'
            )
        elif kind == "triangle":
            pts = " ".join(P(*_xy(v)) for v in value.vertices)
            out.append(f'<polygon class="triangle" {tag} points="{pts}" {st}/>')
        else:
            polys = _sample_conic(value, box)
            for poly in polys:
                pts = " ".join(P(x, y) for x, y in poly)
                out.append(f'<polyline class="conic" {tag} points="{pts}" {st}/>')
            for line in ([] if polys else _degenerate_lines(value)):
                seg = clip_line(line, box)
                if seg:
                    (x0, y0), (x1, y1) = seg
                    out.append(f'<polyline class="conic" {tag} points="{P(x0, y0)} {P(x1, y1)}" {st}/>')
    out.append("</g>")
    out.extend(labels)
    out.append("</svg>")
    return "\n".join(out) + "\n"
