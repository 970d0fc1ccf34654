"""Classical triangle centers and circles, plus isogonal conjugation."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EquilateralEulerLine,
    IrrationalInRationalBackend,
    OnCircumcircle,
    OnSideline,
    RationalBackendUnsupported,
)
from .geom import (
    Circle,
    Line,
    Point,
    Triangle,
    circle_through,
    line_through,
    line_with_normal,
    midpoint,
    orient,
    same_point,
)
from .numeric import Backend, is_zero
from . import numeric


def centroid(tri: Triangle) -> Point:
    A, B, C = tri.vertices
    return Point((A.x + B.x + C.x) / 3, (A.y + B.y + C.y) / 3)


def circumcircle(tri: Triangle) -> Circle:
    return circle_through(*tri.vertices)


def circumcenter(tri: Triangle) -> Point:
    return circumcircle(tri).center


def orthocenter(tri: Triangle) -> Point:
    # H = A + B + C - 2O
    A, B, C = tri.vertices
    O = circumcenter(tri)
    return Point(A.x + B.x + C.x - 2 * O.x, A.y + B.y + C.y - 2 * O.y)


def nine_point_center(tri: Triangle) -> Point:
    return midpoint(circumcenter(tri), orthocenter(tri))


def medial_triangle(tri: Triangle) -> Triangle:
    A, B, C = tri.vertices
    return Triangle(midpoint(B, C), midpoint(C, A), midpoint(A, B))


def nine_point_circle(tri: Triangle) -> Circle:
    return circle_through(*medial_triangle(tri).vertices)


def euler_line(tri: Triangle) -> Line:
    O, H = circumcenter(tri), orthocenter(tri)
    if same_point(O, H):
        raise EquilateralEulerLine("O = G = H for an equilateral triangle")
    return line_through(O, H)


def altitude(tri: Triangle, i: int) -> Line:
    """Altitude through vertex ``i`` (0, 1, 2 for A, B, C)."""
    v = tri.vertices
    p, q, r = v[i], v[(i + 1) % 3], v[(i + 2) % 3]
    return line_with_normal(p, r - q)


def altitudes(tri: Triangle) -> tuple:
    return tuple(altitude(tri, i) for i in range(3))


def from_barycentric(tri: Triangle, u, v, w) -> Point:
    s = u + v + w
    A, B, C = tri.vertices
    return Point((u * A.x + v * B.x + w * C.x) / s, (u * A.y + v * B.y + w * C.y) / s)


def barycentric(tri: Triangle, p: Point) -> tuple:
    """Signed-area barycentrics (unnormalized)."""
    A, B, C = tri.vertices
    return (orient(p, B, C), orient(p, C, A), orient(p, A, B))


def isogonal_conjugate(tri: Triangle, p: Point) -> Point:
    u, v, w = barycentric(tri, p)
    if is_zero(u) or is_zero(v) or is_zero(w):
        raise OnSideline(f"{p} lies on a sideline")
    # normalized, the circumcircle test below compares the power of p with zero
    s = u + v + w
    u, v, w = u / s, v / s, w / s
    a2, b2, c2 = tri.side_lengths_sq()
    alpha, beta, gamma = a2 * v * w, b2 * w * u, c2 * u * v
    if is_zero(alpha + beta + gamma):
        A, B, C = tri.vertices
        direction = Point(
            alpha * A.x + beta * B.x + gamma * C.x,
            alpha * A.y + beta * B.y + gamma * C.y,
        )
        raise OnCircumcircle(f"{p} lies on the circumcircle", direction=direction)
    return from_barycentric(tri, alpha, beta, gamma)


def symmedian_point(tri: Triangle) -> Point:
    return from_barycentric(tri, *tri.side_lengths_sq())


def side_lengths(tri: Triangle) -> tuple:
    """Side lengths (a, b, c); exact only when all three are rational."""
    try:
        return tuple(numeric.sqrt(s) for s in tri.side_lengths_sq())
    except IrrationalInRationalBackend:
        raise RationalBackendUnsupported(
            "side lengths are irrational; convert the triangle to floats"
        ) from None


def incenter(tri: Triangle) -> Point:
    a, b, c = side_lengths(tri)
    return from_barycentric(tri, a, b, c)


def nagel_point(tri: Triangle) -> Point:
    a, b, c = side_lengths(tri)
    s = (a + b + c) / 2
    return from_barycentric(tri, s - a, s - b, s - c)


def has_rational_sides(tri: Triangle) -> bool:
    if tri.backend is Backend.FLOAT:
        return False
    try:
        side_lengths(tri)
    except RationalBackendUnsupported:
        return False
    return True


@dataclass(frozen=True)
class CenterSet:
    G: Point
    O: Point
    H: Point
    T: Point
    K: Point

    @classmethod
    def of(cls, tri: Triangle) -> CenterSet:
        O, H = circumcenter(tri), orthocenter(tri)
        return cls(G=centroid(tri), O=O, H=H, T=midpoint(O, H), K=symmedian_point(tri))
