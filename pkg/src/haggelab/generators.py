"""Seeded random instances with exact rational coordinates.

Every family draws numerators and denominators of magnitude at most 50 and
loops until the instance clears its validity predicates.  Rejection only
looks at prerequisites (degenerate triangles, points on sidelines,
constructions that raise); it never looks at whether a theorem check
passes, so a genuine counterexample cannot be filtered away.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .centers import centroid, circumcircle, isogonal_conjugate, orthocenter
from .errors import GeometryError, NotIndirectlySimilar, NotPerspective, ParallelPerspective
from .geom import Circle, Line, Point, Triangle, dist_sq, same_point, second_intersection, to_json
from .hagge import build_hagge, verify_hagge_suite
from .speckman import build_speckman, build_speckman_through_H, perspective_image, similar_from_circle, verify_speckman_suite

BOUND = 50
MIN_AREA = Fraction(1, 100)
MAX_TRIES = 10_000

FAMILIES = ("hagge", "speckman_h", "general_pair", "simson", "theorem71", "triangle")


@dataclass(frozen=True)
class Instance:
    family: str
    seed: int
    tri: Triangle
    params: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"family": self.family, "seed": self.seed, "triangle": to_json(self.tri)}
        out.update({k: to_json(v) for k, v in sorted(self.params.items())})
        return out


def _rat(rng: random.Random, bound: int = BOUND) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _point(rng: random.Random) -> Point:
    return Point(_rat(rng), _rat(rng))


def _nonzero(rng: random.Random) -> Fraction:
    while True:
        q = _rat(rng)
        if q != 0:
            return q


def _triangle(rng: random.Random) -> Triangle:
    while True:
        try:
            tri = Triangle(_point(rng), _point(rng), _point(rng))
        except GeometryError:
            continue
        if abs(tri.signed_area()) < MIN_AREA:
            continue
        # right angles put the orthocenter on a vertex and collapse too much
        if any(same_point(orthocenter(tri), v) for v in tri.vertices):
            continue
        return tri


def circle_point(rng: random.Random, c: Circle, through: Point) -> Point:
    """Rational point of ``c`` on a chord of random rational slope from ``through``."""
    while True:
        d = Point(Fraction(1), _rat(rng)) if rng.random() < 0.9 else Point(Fraction(0), Fraction(1))
        line = Line(d.y, -d.x, d.x * through.y - d.y * through.x)
        p = second_intersection(c, line, through)
        if not same_point(p, through):
            return p


def _hagge(rng, tri):
    P = _point(rng)
    G = centroid(tri)
    if same_point(P, orthocenter(tri)):
        return None
    cfg = build_hagge(tri, P)
    if same_point(isogonal_conjugate(tri, P), G):
        return None
    rep = verify_hagge_suite(cfg)
    if rep.records:
        return None
    return {"P": P}


def _speckman_h(rng, tri):
    m, k = _rat(rng), _nonzero(rng)
    if k in (1, -1):
        return None
    try:
        cfg = build_speckman_through_H(tri, m, k)
    except (NotPerspective, ParallelPerspective, NotIndirectlySimilar):
        # the family is claimed to be always in perspective: keep the counterexample
        return {"m_slope": m, "k": k}
    rep = verify_speckman_suite(cfg)
    if "skipped" in rep.records:
        return None
    return {"m_slope": m, "k": k}


def _general_pair(rng, tri):
    Q, scale = _point(rng), _nonzero(rng)
    image = perspective_image(tri, Q, scale)
    cfg = build_speckman(tri, image)
    if any(same_point(a, b) for a in (cfg.P, cfg.Q) for b in (cfg.H, cfg.h)):
        return None
    rep = verify_speckman_suite(cfg)
    if "skipped" in rep.records:
        return None
    return {"Q": Q, "scale": scale}


def _simson(rng, tri):
    P = circle_point(rng, circumcircle(tri), tri.A)
    if any(same_point(P, v) for v in tri.vertices):
        return None
    return {"P": P}


def _theorem71(rng, tri):
    center = _point(rng)
    T = _point(rng)
    if same_point(center, T):
        return None
    c = Circle.from_center(center, dist_sq(center, T))
    image = similar_from_circle(tri, c, T)
    if any(same_point(v, T) for v in image.vertices):
        return None
    return {"circle": c, "T": T}


def _plain(rng, tri):
    return {}


_DRAWERS: dict[str, Callable[[random.Random, Triangle], Any]] = {
    "hagge": _hagge,
    "speckman_h": _speckman_h,
    "general_pair": _general_pair,
    "simson": _simson,
    "theorem71": _theorem71,
    "triangle": _plain,
}


def random_instance(seed: int, family: str) -> Instance:
    """Deterministic valid instance of ``family`` for ``seed``."""
    if family not in _DRAWERS:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    rng = random.Random(f"{family}:{seed}")
    draw = _DRAWERS[family]
    for _ in range(MAX_TRIES):
        tri = _triangle(rng)
        try:
            params = draw(rng, tri)
        except GeometryError:
            continue
        if params is not None:
            return Instance(family, seed, tri, params)
    raise RuntimeError(f"no valid {family} instance after {MAX_TRIES} draws")
