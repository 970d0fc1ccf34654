"""Closed-form audit for the family whose similarity is centered at H.

The triangle A(-2-2vw, 0), B(-2vw, 2v), C(-2vw, 2w) has its orthocenter at
the origin.  XYZ is its image under dilation by k about H followed by
reflection in y = m x.  Published closed forms for the lines, circles and
points of this configuration are compared one by one against the
constructive pipeline; the constructive value is always taken as truth.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .centers import circumcircle, orthocenter
from .errors import DegenerateParameters, GeometryError
from .geom import (
    Circle,
    Line,
    Point,
    Triangle,
    circle_through,
    line_through,
    parallel_through,
    same_circle,
    same_line,
    same_point,
    second_intersection,
    to_json,
)
from .numeric import coerce, Backend
from .report import CheckReport
from .similarity import reflect_dilate
from .speckman import perspector


def _circle(a, g2, f2, h) -> Circle:
    """From ``a(x^2 + y^2) + g2 x + f2 y + h = 0``."""
    return Circle(g2 / (2 * a), f2 / (2 * a), h / a)


def printed_forms(v, w, m, k) -> dict:
    """The published closed forms, keyed by object name."""
    s = 1 + m * m
    n = 1 - m * m
    vw = v * w
    q = 4 * k / ((1 - k * k) * s * s)
    return {
        "line_BC": Line(1, 0, 2 * vw),
        "line_CA": Line(-w, 1, 0),
        "line_AB": Line(-v, 1, -2 * v * (1 + vw)),
        # printed with the variable letter v in place of y
        "line_AH": Line(0, 1, 0),
        "line_BH": Line(1, w, 0),
        "line_CH": Line(1, v, 0),
        "circle_ABC": Circle(1 + 3 * vw, -(v + w), 8 * vw * (1 + vw)),
        "point_O": Point(-1 - 3 * vw, v + w),
        "radius_sq_ABC": (1 + v * v) * (1 + w * w),
        "point_X": Point(-2 * k * n * (1 + vw) / s, -4 * k * m * (1 + vw) / s),
        "point_Y": Point(2 * k * v * (2 * m - w * n) / s, 2 * k * v * (-2 * m * w - n) / s),
        "point_Z": Point(2 * k * w * (2 * m - v * n) / s, 2 * k * w * (-2 * m * v - n) / s),
        "line_AX": Line(2 * k * m, s - k * n, 4 * k * m * (1 + vw)),
        "line_BY": Line(
            s + k * (1 + 2 * w * m - m * m),
            w * s - k * (w - 2 * m - w * m * m),
            -4 * k * v * (m * (1 - w * w) - w * n),
        ),
        "line_CZ": Line(
            s + k * (1 + 2 * v * m - m * m),
            v * s - k * (v - 2 * m - v * m * m),
            -4 * k * w * (m * (1 - v * v) - v * n),
        ),
        "point_Q": Point(
            q * (k * (m**4 * vw + m**3 * (v + w) + 2 * m * m - m * (v + w) + vw)
                 + m**4 * vw + m**3 * (v + w) + m * (v + w) - vw),
            q * -m * (k * (m * m * (vw - 1) + 2 * m * (v + w) - vw + 1) + s * (1 + vw)),
        ),
        "circle_XYZ": _circle(
            s,
            -2 * k * (m * m * (3 * vw + 1) + 2 * m * (v + w) - (1 + 3 * vw)),
            -2 * k * (m * m * (v + w) - 2 * m * (3 * vw + 1) - (v + w)),
            8 * k * k * vw * (1 + vw) * s,
        ),
        "line_XH": Line(2 * m, -n, 0),
        "line_YH": Line(m * m - 2 * m * w - 1, -(m * m * w + 2 * m - w), 0),
        "line_ZH": Line(m * m - 2 * m * v - 1, -(m * m * v + 2 * m - v), 0),
        "point_U": Point(4 * k / s * -n, 4 * k / s * -2 * m),
        "point_V": Point(
            4 * k * w * (1 + vw) / (s * (1 + w * w)) * (m * m * w + 2 * m - w),
            4 * k * w * (1 + vw) / (s * (1 + w * w)) * (m * m - 2 * m * w - 1),
        ),
        "point_W": Point(
            4 * k * v * (1 + vw) / (s * (1 + v * v)) * (m * m * v + 2 * m - v),
            4 * k * v * (1 + vw) / (s * (1 + v * v)) * (m * m - 2 * m * v - 1),
        ),
        "point_D": Point(-4 * vw, 0),
        "point_E": Point(4 * w * (1 + vw) / (1 + w * w) * -w, 4 * w * (1 + vw) / (1 + w * w)),
        # the denominator is printed as 1 + w^2
        "point_F": Point(4 * v * (1 + vw) / (1 + w * w) * -v, 4 * v * (1 + vw) / (1 + w * w)),
        "line_D_parallel_AX": Line(2 * k * m, s - k * n, 8 * k * m * vw),
    }


def _same(a, b) -> bool:
    if isinstance(a, Point):
        return same_point(a, b)
    if isinstance(a, Line):
        return same_line(a, b)
    if isinstance(a, Circle):
        return same_circle(a, b)
    return a == b


def _dump(obj):
    if isinstance(obj, (Point, Line, Circle)):
        return to_json(obj)
    return str(obj)


def section8_oracle(v, w, m, k) -> CheckReport:
    """Construct the configuration, audit the closed forms, check the theorems.

    Audit entries land in ``records["audit"]``; a mismatch is a finding and
    does not fail the report.  Checks cover the properties the closed forms
    are meant to exhibit, evaluated on the constructed objects.
    """
    v, w, m, k = (coerce(x, Backend.RATIONAL) for x in (v, w, m, k))
    if v == w:
        raise DegenerateParameters("v = w collapses B and C")
    if v == 0 or w == 0 or 1 + v * w == 0:
        raise DegenerateParameters("a vertex falls on the orthocenter")
    if k in (0, 1, -1):
        raise DegenerateParameters(f"k = {k} leaves no perspective")

    A = Point(-2 - 2 * v * w, Fraction(0))
    B = Point(-2 * v * w, 2 * v)
    C = Point(-2 * v * w, 2 * w)
    tri = Triangle(A, B, C)
    H = orthocenter(tri)
    gamma = circumcircle(tri)
    sim = reflect_dilate(H, m, k)
    X, Y, Z = (sim(p) for p in (A, B, C))
    img = Triangle(X, Y, Z)
    circ2 = circle_through(X, Y, Z)

    def meet_again(c: Circle, P: Point) -> Point:
        return second_intersection(c, line_through(P, H), P)

    D, E, F = (meet_again(gamma, p) for p in (A, B, C))
    U, V, W = (meet_again(circ2, p) for p in (X, Y, Z))
    built: dict[str, Callable] = {
        "line_BC": lambda: line_through(B, C),
        "line_CA": lambda: line_through(C, A),
        "line_AB": lambda: line_through(A, B),
        "line_AH": lambda: line_through(A, H),
        "line_BH": lambda: line_through(B, H),
        "line_CH": lambda: line_through(C, H),
        "circle_ABC": lambda: gamma,
        "point_O": lambda: gamma.center,
        "radius_sq_ABC": lambda: gamma.radius_sq,
        "point_X": lambda: X,
        "point_Y": lambda: Y,
        "point_Z": lambda: Z,
        "line_AX": lambda: line_through(A, X),
        "line_BY": lambda: line_through(B, Y),
        "line_CZ": lambda: line_through(C, Z),
        "point_Q": lambda: perspector(tri, img),
        "circle_XYZ": lambda: circ2,
        "line_XH": lambda: line_through(X, H),
        "line_YH": lambda: line_through(Y, H),
        "line_ZH": lambda: line_through(Z, H),
        "point_U": lambda: U,
        "point_V": lambda: V,
        "point_W": lambda: W,
        "point_D": lambda: D,
        "point_E": lambda: E,
        "point_F": lambda: F,
        "line_D_parallel_AX": lambda: parallel_through(D, line_through(A, X)),
    }
    instance = {name: str(val) for name, val in zip("vwmk", (v, w, m, k))}
    rep = CheckReport("section8", instance=instance)

    try:
        printed = printed_forms(v, w, m, k)
    except (ZeroDivisionError, GeometryError) as exc:
        printed, rep.records["printed_error"] = {}, type(exc).__name__
    audit = []
    for name, make in built.items():
        try:
            got = make()
        except GeometryError as exc:
            audit.append({"eq": name, "status": "undefined", "error": type(exc).__name__})
            continue
        if name not in printed:
            audit.append({"eq": name, "status": "undefined", "constructed": _dump(got)})
        elif _same(printed[name], got):
            audit.append({"eq": name, "status": "match"})
        else:
            audit.append({"eq": name, "status": "mismatch", "printed": _dump(printed[name]), "constructed": _dump(got)})
    rep.records["audit"] = audit

    rep.add("orthocenter_at_origin", "H is the origin", same_point(H, Point(0, 0)))
    rep.add("circumradius", "R^2 = (1 + v^2)(1 + w^2)", gamma.radius_sq == (1 + v * v) * (1 + w * w))
    for P, Q, name in ((D, U, "U"), (E, V, "V"), (F, W, "W")):
        src = {"U": (A, X), "V": (B, Y), "W": (C, Z)}[name]
        through = parallel_through(P, line_through(*src))
        rep.add(
            f"parallel_meets_{name}",
            f"the parallel through the circumcircle point to the perspective line passes through {name}",
            through.contains(Q),
        )
    rep.add(
        "uvw_image_of_def",
        "the similarity takes D, E, F to U, V, W",
        all(same_point(sim(p), q) for p, q in ((D, U), (E, V), (F, W))),
    )
    try:
        perspector(tri, img)
        rep.add("perspective", "ABC and XYZ are in perspective", True)
    except GeometryError as exc:
        rep.add("perspective", "ABC and XYZ are in perspective", False, error=type(exc).__name__)
    return rep
