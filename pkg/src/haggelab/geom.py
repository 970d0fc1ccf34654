"""Points, lines, circles, conics and the constructions built on them.

Every object stores equation coefficients rather than centers and radii so
that the whole toolkit stays free of square roots.  With Fraction
coordinates all constructions and predicates are exact; with float
coordinates predicates compare against :data:`numeric.EPS`.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from . import linalg
from .errors import (
    CoincidentLines,
    CoincidentPoints,
    CollinearCenters,
    CollinearPoints,
    ConcentricCircles,
    DegenerateConfiguration,
    DegenerateTriangle,
    DuplicatePoints,
    MixedBackend,
    ParabolicConic,
    ParallelLines,
    PointNotOnCircle,
    PointNotOnCircumcircle,
    PointNotOnLine,
)
from .numeric import Backend, Scalar, coerce, format_scalar, is_zero, parse_scalar


def _scalar(v) -> Scalar:
    if isinstance(v, float):
        return v
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        return parse_scalar(v)
    raise TypeError(f"not a scalar: {v!r}")


class Point:
    __slots__ = ("x", "y")

    def __init__(self, x, y):
        x, y = _scalar(x), _scalar(y)
        if isinstance(x, float) is not isinstance(y, float):
            raise MixedBackend("point coordinates must share one backend")
        self.x = x
        self.y = y

    @property
    def backend(self) -> Backend:
        return Backend.FLOAT if isinstance(self.x, float) else Backend.RATIONAL

    def __add__(self, o: Point) -> Point:
        return Point(self.x + o.x, self.y + o.y)

    def __sub__(self, o: Point) -> Point:
        return Point(self.x - o.x, self.y - o.y)

    def __mul__(self, k) -> Point:
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k) -> Point:
        return Point(self.x / k, self.y / k)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def __eq__(self, o) -> bool:
        return isinstance(o, Point) and self.x == o.x and self.y == o.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"Point({format_scalar(self.x)}, {format_scalar(self.y)})"

    def to_float(self) -> Point:
        return Point(float(self.x), float(self.y))


def dot(u: Point, v: Point) -> Scalar:
    return u.x * v.x + u.y * v.y


def cross(u: Point, v: Point) -> Scalar:
    return u.x * v.y - u.y * v.x


def orient(p: Point, q: Point, r: Point) -> Scalar:
    """Twice the signed area of pqr (positive when counter-clockwise)."""
    return cross(q - p, r - p)


def dist_sq(p: Point, q: Point) -> Scalar:
    d = p - q
    return dot(d, d)


def same_point(p: Point, q: Point) -> bool:
    return is_zero(p.x - q.x) and is_zero(p.y - q.y)


def _normalize(coeffs: Sequence[Scalar], lead: int) -> tuple:
    """Canonical representative of a projective coefficient vector.

    Exact vectors become coprime integers; float vectors get unit norm over
    the first ``lead`` entries.  Either way the first nonzero entry is
    positive.
    """
    if any(isinstance(c, float) for c in coeffs):
        if not all(isinstance(c, float) for c in coeffs):
            raise MixedBackend("coefficients must share one backend")
        n = math.sqrt(sum(c * c for c in coeffs[:lead])) or 1.0
        out = [c / n for c in coeffs]
        first = next((c for c in out if not is_zero(c)), 1.0)
        return tuple(-c for c in out) if first < 0 else tuple(out)
    fr = [Fraction(c) for c in coeffs]
    den = reduce(math.lcm, (c.denominator for c in fr), 1)
    ints = [int(c * den) for c in fr]
    g = reduce(math.gcd, ints, 0) or 1
    first = next((c for c in ints if c != 0), 1)
    if first < 0:
        g = -g
    return tuple(Fraction(c // g) for c in ints)


class Line:
    """The line ``a*x + b*y + c = 0`` stored in canonical form."""

    __slots__ = ("a", "b", "c")

    def __init__(self, a, b, c):
        a, b, c = _scalar(a), _scalar(b), _scalar(c)
        if is_zero(a) and is_zero(b):
            raise DegenerateConfiguration("line needs (a, b) != (0, 0)")
        self.a, self.b, self.c = _normalize((a, b, c), 2)

    @property
    def coefficients(self) -> tuple:
        return (self.a, self.b, self.c)

    @property
    def normal(self) -> Point:
        return Point(self.a, self.b)

    @property
    def direction(self) -> Point:
        return Point(self.b, -self.a)

    def value(self, p: Point) -> Scalar:
        return self.a * p.x + self.b * p.y + self.c

    def contains(self, p: Point) -> bool:
        v = self.value(p)
        if not isinstance(v, float):
            return is_zero(v)
        # float lines have a unit normal, so v is a distance; far points carry larger error
        return is_zero(v / max(1.0, abs(p.x), abs(p.y)))

    def __eq__(self, o) -> bool:
        return isinstance(o, Line) and self.coefficients == o.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return "Line({})".format(", ".join(format_scalar(v) for v in self.coefficients))


class Circle:
    """The circle ``x^2 + y^2 + 2g*x + 2f*y + h = 0``.

    A zero squared radius is a point-circle.
    """

    __slots__ = ("g", "f", "h")

    def __init__(self, g, f, h):
        self.g, self.f, self.h = _scalar(g), _scalar(f), _scalar(h)
        if len({isinstance(v, float) for v in (self.g, self.f, self.h)}) > 1:
            raise MixedBackend("circle coefficients must share one backend")

    @classmethod
    def from_center(cls, center: Point, radius_sq) -> Circle:
        return cls(-center.x, -center.y, dot(center, center) - radius_sq)

    @classmethod
    def on_diameter(cls, p: Point, q: Point) -> Circle:
        """Circle having pq as a diameter."""
        return cls(-(p.x + q.x) / 2, -(p.y + q.y) / 2, p.x * q.x + p.y * q.y)

    @property
    def center(self) -> Point:
        return Point(-self.g, -self.f)

    @property
    def radius_sq(self) -> Scalar:
        return self.g * self.g + self.f * self.f - self.h

    @property
    def coefficients(self) -> tuple:
        return (self.g, self.f, self.h)

    def power(self, p: Point) -> Scalar:
        return p.x * p.x + p.y * p.y + 2 * self.g * p.x + 2 * self.f * p.y + self.h

    def contains(self, p: Point) -> bool:
        pw = self.power(p)
        if not isinstance(pw, float):
            return is_zero(pw)
        # power = d^2 - r^2; compare it with d^2 + r^2 so the test ignores scale
        scale = dist_sq(p, self.center) + abs(self.radius_sq)
        return is_zero(pw) if scale <= 1.0 else is_zero(pw / scale)

    def as_conic(self) -> Conic:
        one = 1.0 if isinstance(self.g, float) else 1
        return Conic(one, 0 * one, one, 2 * self.g, 2 * self.f, self.h)

    def __eq__(self, o) -> bool:
        return isinstance(o, Circle) and self.coefficients == o.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return "Circle(g={}, f={}, h={})".format(*(format_scalar(v) for v in self.coefficients))


class Conic:
    """``A x^2 + B xy + C y^2 + D x + E y + F = 0`` in canonical form."""

    __slots__ = ("A", "B", "C", "D", "E", "F")

    def __init__(self, A, B, C, D, E, F):
        vals = tuple(_scalar(v) for v in (A, B, C, D, E, F))
        if all(is_zero(v) for v in vals[:5]):
            raise DegenerateConfiguration("conic needs a nonzero non-constant coefficient")
        self.A, self.B, self.C, self.D, self.E, self.F = _normalize(vals, 6)

    @property
    def coefficients(self) -> tuple:
        return (self.A, self.B, self.C, self.D, self.E, self.F)

    def value(self, p: Point) -> Scalar:
        x, y = p.x, p.y
        return self.A * x * x + self.B * x * y + self.C * y * y + self.D * x + self.E * y + self.F

    def matrix(self) -> list:
        """Symmetric 3x3 matrix of the homogeneous quadratic form."""
        A, B, C, D, E, F = self.coefficients
        return [[A, B / 2, D / 2], [B / 2, C, E / 2], [D / 2, E / 2, F]]

    def __eq__(self, o) -> bool:
        return isinstance(o, Conic) and self.coefficients == o.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return "Conic({})".format(", ".join(format_scalar(v) for v in self.coefficients))


class Triangle:
    __slots__ = ("A", "B", "C")

    def __init__(self, A: Point, B: Point, C: Point):
        if is_zero(orient(A, B, C)):
            raise DegenerateTriangle(f"collinear vertices {A}, {B}, {C}")
        self.A, self.B, self.C = A, B, C

    @property
    def vertices(self) -> tuple:
        return (self.A, self.B, self.C)

    @property
    def backend(self) -> Backend:
        return self.A.backend

    def sides(self) -> tuple:
        """Sidelines opposite A, B, C: (BC, CA, AB)."""
        return (line_through(self.B, self.C), line_through(self.C, self.A), line_through(self.A, self.B))

    def side_lengths_sq(self) -> tuple:
        return (dist_sq(self.B, self.C), dist_sq(self.C, self.A), dist_sq(self.A, self.B))

    def signed_area(self) -> Scalar:
        return orient(self.A, self.B, self.C) / 2

    def to_float(self) -> Triangle:
        return Triangle(*(v.to_float() for v in self.vertices))

    def __eq__(self, o) -> bool:
        return isinstance(o, Triangle) and self.vertices == o.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __repr__(self) -> str:
        return f"Triangle({self.A!r}, {self.B!r}, {self.C!r})"


# --- constructions -----------------------------------------------------------


def line_through(p: Point, q: Point) -> Line:
    if same_point(p, q):
        raise CoincidentPoints(f"{p} and {q} coincide")
    return Line(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y)


def parallel_through(p: Point, l: Line) -> Line:
    return Line(l.a, l.b, -(l.a * p.x + l.b * p.y))


def perpendicular_through(p: Point, l: Line) -> Line:
    return Line(l.b, -l.a, -(l.b * p.x - l.a * p.y))


def line_with_normal(p: Point, normal: Point) -> Line:
    """Line through ``p`` perpendicular to the vector ``normal``."""
    return Line(normal.x, normal.y, -dot(normal, p))


def intersect_lines(l1: Line, l2: Line) -> Point:
    d = l1.a * l2.b - l2.a * l1.b
    if is_zero(d):
        if is_zero(l1.a * l2.c - l2.a * l1.c) and is_zero(l1.b * l2.c - l2.b * l1.c):
            raise CoincidentLines(f"{l1} and {l2} coincide")
        raise ParallelLines(f"{l1} and {l2} are parallel")
    return Point((l1.b * l2.c - l2.b * l1.c) / d, (l2.a * l1.c - l1.a * l2.c) / d)


def foot(p: Point, l: Line) -> Point:
    """Foot of the perpendicular from ``p`` to ``l``."""
    s = l.value(p) / (l.a * l.a + l.b * l.b)
    return Point(p.x - s * l.a, p.y - s * l.b)


def reflect_in_line(p: Point, l: Line) -> Point:
    s = 2 * l.value(p) / (l.a * l.a + l.b * l.b)
    return Point(p.x - s * l.a, p.y - s * l.b)


def second_intersection(c: Circle, l: Line, known: Point) -> Point:
    """Other meeting point of ``l`` with ``c``; ``known`` again if tangent."""
    if not c.contains(known):
        raise PointNotOnCircle(f"{known} is not on {c}")
    if not l.contains(known):
        raise PointNotOnLine(f"{known} is not on {l}")
    d = l.direction
    t = -2 * (dot(known, d) + c.g * d.x + c.f * d.y) / dot(d, d)
    return Point(known.x + t * d.x, known.y + t * d.y)


def circle_through(p: Point, q: Point, r: Point) -> Circle:
    if same_point(p, q) or same_point(q, r) or same_point(p, r):
        raise DuplicatePoints(f"repeated point among {p}, {q}, {r}")
    u, v = q - p, r - p
    den = 2 * cross(u, v)
    if is_zero(den):
        raise CollinearPoints(f"{p}, {q}, {r} are collinear")
    uu, vv = dot(u, u), dot(v, v)
    cx = (uu * v.y - vv * u.y) / den
    cy = (vv * u.x - uu * v.x) / den
    ox, oy = p.x + cx, p.y + cy
    return Circle(-ox, -oy, ox * ox + oy * oy - (cx * cx + cy * cy))


def _conic_row(p: Point) -> list:
    return [p.x * p.x, p.x * p.y, p.y * p.y, p.x, p.y, p.x * 0 + 1]


def conic_through_five(*points: Point) -> Conic:
    if len(points) != 5:
        raise TypeError("conic_through_five needs exactly five points")
    basis = linalg.nullspace([_conic_row(p) for p in points])
    if len(basis) != 1:
        raise DegenerateConfiguration(f"five points fix no unique conic (family of dimension {len(basis)})")
    return Conic(*basis[0])


def conic_through(points: Sequence[Point], rectangular: bool = False, extra_rows: Sequence = ()) -> Conic:
    """Conic through the first five distinct points of ``points``.

    With ``rectangular=True`` the trace condition A + C = 0 is added when
    fewer than five distinct points are available (a right triangle, say,
    where the orthocenter is a vertex).  Raises DegenerateConfiguration
    unless exactly one conic remains.  Points past the fifth distinct one
    are not used; checking them is the caller's business.  Each of
    ``extra_rows`` is one more linear condition on (A, B, C, D, E, F).
    """
    distinct: list[Point] = []
    for p in points:
        if not any(same_point(p, q) for q in distinct):
            distinct.append(p)
    rows = [_conic_row(p) for p in distinct[:5]]
    if rectangular and len(rows) < 5:
        one = rows[0][5] if rows else Fraction(1)
        rows.append([one, one * 0, one, one * 0, one * 0, one * 0])
    rows.extend(list(r) for r in extra_rows)
    basis = linalg.nullspace(rows) if rows else []
    if len(basis) != 1:
        raise DegenerateConfiguration(f"points fix no unique conic (family of dimension {len(basis)})")
    return Conic(*basis[0])


def conic_contains(K: Conic, p: Point) -> bool:
    return is_zero(K.value(p))


def conic_center(K: Conic) -> Point:
    A, B, C, D, E, _ = K.coefficients
    det = 4 * A * C - B * B
    if is_zero(det):
        raise ParabolicConic(f"{K} has no center")
    return Point((B * E - 2 * C * D) / det, (B * D - 2 * A * E) / det)


def is_rectangular(K: Conic) -> bool:
    return is_zero(K.A + K.C)


def quadratic_parts_proportional(K1: Conic, K2: Conic) -> bool:
    """Quadratic parts parallel as projective triples: parallel asymptotes."""
    u, v = (K1.A, K1.B, K1.C), (K2.A, K2.B, K2.C)
    return all(is_zero(u[i] * v[j] - u[j] * v[i]) for i, j in ((0, 1), (0, 2), (1, 2)))


def same_conic(K1: Conic, K2: Conic) -> bool:
    u, v = K1.coefficients, K2.coefficients
    return all(is_zero(u[i] * v[j] - u[j] * v[i]) for i in range(6) for j in range(i + 1, 6))


def same_circle(c1: Circle, c2: Circle) -> bool:
    return all(is_zero(a - b) for a, b in zip(c1.coefficients, c2.coefficients))


def same_line(l1: Line, l2: Line) -> bool:
    u, v = l1.coefficients, l2.coefficients
    return all(is_zero(u[i] * v[j] - u[j] * v[i]) for i, j in ((0, 1), (0, 2), (1, 2)))


# --- predicates --------------------------------------------------------------


def _hadamard_zero(det: Scalar, rows: Sequence) -> bool:
    """Zero test for a determinant; floats are compared relative to the product of row norms."""
    if not isinstance(det, float):
        return is_zero(det)
    norms = [math.sqrt(sum(float(c) * float(c) for c in row)) for row in rows]
    # a vanishing row means coincident points, which the exact test also accepts
    return any(is_zero(n) for n in norms) or is_zero(det / math.prod(norms))


def collinear(p: Point, q: Point, r: Point) -> bool:
    u, v = q - p, r - p
    return _hadamard_zero(cross(u, v), (u, v))


def all_collinear(points: Iterable[Point]) -> bool:
    """True when every point lies on one line (vacuous for < 3 distinct)."""
    pts: list[Point] = []
    for p in points:
        if not any(same_point(p, q) for q in pts):
            pts.append(p)
    if len(pts) < 3:
        return True
    a, b = pts[0], pts[1]
    return all(collinear(a, b, r) for r in pts[2:])


def concurrent(l1: Line, l2: Line, l3: Line) -> bool:
    """Exact 3x3 determinant test; three parallel lines count as concurrent at infinity."""
    rows = [l1.coefficients, l2.coefficients, l3.coefficients]
    return _hadamard_zero(linalg.det3(rows), rows)


def concyclic(p: Point, q: Point, r: Point, s: Point) -> bool:
    """Lifted-circle determinant; four collinear points also pass."""
    rows = [[v.x - s.x, v.y - s.y, dist_sq(v, s)] for v in (p, q, r)]
    return _hadamard_zero(linalg.det3(rows), rows)


def parallel(l1: Line, l2: Line) -> bool:
    return is_zero(l1.a * l2.b - l2.a * l1.b)


def perpendicular(l1: Line, l2: Line) -> bool:
    return is_zero(l1.a * l2.a + l1.b * l2.b)


# --- affine maps -------------------------------------------------------------


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def divide(p: Point, q: Point, t) -> Point:
    """Point p + t(q - p); t = 1/2 is the midpoint."""
    t = _scalar(t)
    return Point(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y))


def half_turn(p: Point, center: Point) -> Point:
    return Point(2 * center.x - p.x, 2 * center.y - p.y)


def dilate(p: Point, center: Point, k) -> Point:
    k = _scalar(k)
    return Point(center.x + k * (p.x - center.x), center.y + k * (p.y - center.y))


# --- circles -----------------------------------------------------------------


def radical_axis(c1: Circle, c2: Circle) -> Line:
    dg, df = c1.g - c2.g, c1.f - c2.f
    if is_zero(dg) and is_zero(df):
        raise ConcentricCircles(f"{c1} and {c2} are concentric")
    return Line(2 * dg, 2 * df, c1.h - c2.h)


def radical_center(c1: Circle, c2: Circle, c3: Circle) -> Point:
    try:
        return intersect_lines(radical_axis(c1, c2), radical_axis(c1, c3))
    except (ParallelLines, CoincidentLines):
        raise CollinearCenters("circle centers are collinear") from None


def simson_line(tri: Triangle, p: Point) -> Line:
    """Line of the feet of the perpendiculars from ``p`` to the sidelines.

    At a vertex two feet coincide with that vertex; the line through the
    distinct feet (the altitude) is returned instead of failing.
    """
    if not circle_through(*tri.vertices).contains(p):
        raise PointNotOnCircumcircle(f"{p} is not on the circumcircle")
    feet = [foot(p, side) for side in tri.sides()]
    if not all_collinear(feet):
        raise DegenerateConfiguration("feet of perpendiculars are not collinear")
    distinct = [feet[0]] + [f for f in feet[1:] if not same_point(f, feet[0])]
    return line_through(distinct[0], distinct[1])


# --- serialization -----------------------------------------------------------


def to_json(obj):
    """JSON-ready form of a geometric value (scalars as lowest-terms strings)."""
    if isinstance(obj, Point):
        return {"x": format_scalar(obj.x), "y": format_scalar(obj.y)}
    if isinstance(obj, Line):
        return {"type": "line", "coefficients": [format_scalar(v) for v in obj.coefficients]}
    if isinstance(obj, Circle):
        return {"type": "circle", "coefficients": [format_scalar(v) for v in obj.coefficients]}
    if isinstance(obj, Conic):
        return {"type": "conic", "coefficients": [format_scalar(v) for v in obj.coefficients]}
    if isinstance(obj, Triangle):
        return {"type": "triangle", "vertices": [to_json(v) for v in obj.vertices]}
    if isinstance(obj, (Fraction, float, int)):
        return format_scalar(_scalar(obj))
    if isinstance(obj, (tuple, list)):
        return [to_json(v) for v in obj]
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def from_json(data, backend: Backend = Backend.RATIONAL):
    def s(v):
        return coerce(v, backend)

    if isinstance(data, dict) and "x" in data:
        return Point(s(data["x"]), s(data["y"]))
    kind = data.get("type") if isinstance(data, dict) else None
    if kind == "line":
        return Line(*map(s, data["coefficients"]))
    if kind == "circle":
        return Circle(*map(s, data["coefficients"]))
    if kind == "conic":
        return Conic(*map(s, data["coefficients"]))
    if kind == "triangle":
        return Triangle(*(from_json(v, backend) for v in data["vertices"]))
    raise ValueError(f"unrecognized geometric JSON: {data!r}")
