"""Orientation-reversing similarities ``z -> a*conj(z) + b``.

Complex numbers are carried as :class:`Point` pairs so the exact backend
never touches Python's float-only ``complex``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DegeneratePair, RatioOne
from .geom import Point, Triangle, same_point
from .numeric import Scalar, is_zero


def cmul(p: Point, q: Point) -> Point:
    return Point(p.x * q.x - p.y * q.y, p.x * q.y + p.y * q.x)


def conj(p: Point) -> Point:
    return Point(p.x, -p.y)


def cdiv(p: Point, q: Point) -> Point:
    n = q.x * q.x + q.y * q.y
    return Point((p.x * q.x + p.y * q.y) / n, (p.y * q.x - p.x * q.y) / n)


def norm_sq(p: Point) -> Scalar:
    return p.x * p.x + p.y * p.y


@dataclass(frozen=True)
class IndirectSimilarity:
    multiplier: Point
    offset: Point
    center: Optional[Point] = None

    @classmethod
    def from_parts(cls, multiplier: Point, offset: Point) -> IndirectSimilarity:
        return cls(multiplier, offset, _fixed_point(multiplier, offset))

    @property
    def ratio_sq(self) -> Scalar:
        return norm_sq(self.multiplier)

    def apply(self, p: Point) -> Point:
        return cmul(self.multiplier, conj(p)) + self.offset

    __call__ = apply

    def square(self) -> tuple[Point, Point]:
        """The direct similarity ``z -> a*conj(a)*z + (a*conj(b) + b)``."""
        a, b = self.multiplier, self.offset
        return cmul(a, conj(a)), cmul(a, conj(b)) + b

    def axis_angle(self) -> float:
        """Angle of one double line (the other is perpendicular), mod pi."""
        return math.atan2(float(self.multiplier.y), float(self.multiplier.x)) / 2 % math.pi


def _fixed_point(a: Point, b: Point) -> Optional[Point]:
    # z = a conj(z) + b, split into real and imaginary parts
    det = 1 - norm_sq(a)
    if is_zero(det):
        return None
    x = ((1 + a.x) * b.x + a.y * b.y) / det
    y = (a.y * b.x + (1 - a.x) * b.y) / det
    return Point(x, y)


def fit(A: Point, A1: Point, B: Point, B1: Point) -> tuple[Point, Point]:
    """Multiplier and offset of the map sending A to A1 and B to B1."""
    if same_point(A, B) or same_point(A1, B1):
        raise DegeneratePair("pair points must be distinct")
    a = cdiv(A1 - B1, conj(A) - conj(B))
    return a, A1 - cmul(a, conj(A))


def similarity_from_pairs(A: Point, A1: Point, B: Point, B1: Point) -> IndirectSimilarity:
    a, b = fit(A, A1, B, B1)
    center = _fixed_point(a, b)
    if center is None:
        raise RatioOne("|a| = 1: no unique fixed point")
    return IndirectSimilarity(a, b, center)


def map_between(t1: Triangle, t2: Triangle) -> Optional[tuple[Point, Point]]:
    """(a, b) of the indirect similarity taking t1 onto t2 vertex-wise, if any."""
    try:
        a, b = fit(t1.A, t2.A, t1.B, t2.B)
    except DegeneratePair:
        return None
    image = cmul(a, conj(t1.C)) + b
    return (a, b) if same_point(image, t2.C) else None


def is_indirectly_similar(t1: Triangle, t2: Triangle) -> bool:
    return map_between(t1, t2) is not None


def reflect_dilate(center: Point, slope, k) -> IndirectSimilarity:
    """Dilation by ``k`` about ``center`` followed by reflection in the line
    of the given slope through ``center``."""
    one = slope * 0 + 1
    d = one + slope * slope
    a = Point(k * (one - slope * slope) / d, k * 2 * slope / d)
    return IndirectSimilarity(a, center - cmul(a, conj(center)), center)
