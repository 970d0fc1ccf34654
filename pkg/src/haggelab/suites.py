"""Seeded batches of verification runs.

Instance ``i`` of a run with seed ``s`` is drawn from its own seed, so a
batch is reproducible instance by instance and the order of the merged
report never depends on how the work was scheduled.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Optional

from .audit import section8_oracle
from .centers import centroid, circumcircle
from .errors import GeometryError
from .generators import Instance, random_instance
from .geom import (
    Circle,
    Point,
    Triangle,
    same_circle,
    to_json,
)
from .hagge import (
    FLOAT_TOL,
    build_hagge,
    midpoint_conic,
    ratio_points,
    special_cases,
    verify_double_simson,
    verify_hagge_suite,
    verify_ratio_conic,
)
from .numeric import Backend, is_zero, tolerance
from .report import Check, CheckReport, SuiteReport
from .speckman import (
    build_speckman,
    build_speckman_through_H,
    double_point_from_hyperbolas,
    perspective_image,
    similar_from_circle,
    verify_orthologic,
    verify_speckman_suite,
)

PRIMARY = ("hagge", "speckman", "section8")


class _UnitMap:
    """Float map putting the centroid at the origin with vertices inside the unit square."""

    def __init__(self, tri: Triangle):
        self.c = centroid(tri)
        self.s = max(max(abs(v.x - self.c.x), abs(v.y - self.c.y)) for v in tri.vertices)

    def point(self, p: Point) -> Point:
        return Point(float((p.x - self.c.x) / self.s), float((p.y - self.c.y) / self.s))

    def __call__(self, v):
        if isinstance(v, Point):
            return self.point(v)
        if isinstance(v, Triangle):
            return Triangle(*(self.point(p) for p in v.vertices))
        if isinstance(v, Circle):
            return Circle.from_center(self.point(v.center), float(v.radius_sq / (self.s * self.s)))
        return float(v)


def _convert(inst: Instance, backend: Backend, extra: Optional[dict] = None) -> tuple:
    """Triangle and parameters in the requested backend.

    Float runs work on a translated and scaled copy: the float predicates
    use an absolute tolerance, and none of the properties checked depend
    on position or size.  Slopes and ratios are unchanged by that map.
    """
    params = dict(inst.params, **(extra or {}))
    if backend is Backend.RATIONAL:
        return inst.tri, params
    f = _UnitMap(inst.tri)
    return f(inst.tri), {k: f(v) for k, v in params.items()}


def _hagge(inst: Instance, backend: Backend) -> CheckReport:
    tri, p = _convert(inst, backend)
    return verify_hagge_suite(build_hagge(tri, p["P"]))


def _speckman(inst: Instance, backend: Backend) -> CheckReport:
    tri, p = _convert(inst, backend)
    try:
        cfg = build_speckman_through_H(tri, p["m_slope"], p["k"])
    except GeometryError as exc:
        rep = CheckReport("speckman", backend=backend.value)
        rep.add("perspector_exists", "the reflected dilation about H is in perspective with ABC", False, error=exc.name)
        return rep
    rep = verify_speckman_suite(cfg)
    rep.checks.insert(0, Check("perspector_exists", "the reflected dilation about H is in perspective with ABC", True))
    return rep


def _speckman_general(inst: Instance, backend: Backend) -> CheckReport:
    image = perspective_image(inst.tri, inst.params["Q"], inst.params["scale"])
    tri, p = _convert(inst, backend, {"image": image})
    cfg = build_speckman(tri, p["image"])
    rep = verify_speckman_suite(cfg)
    try:
        found = double_point_from_hyperbolas(cfg.tri, cfg.image, cfg.Q)
        P = cfg.P.to_float()
        # float accuracy is relative: a far double point is only known to |P| * eps / sin(crossing angle)
        err = max(abs(found.x - P.x), abs(found.y - P.y)) / max(1.0, abs(P.x), abs(P.y))
        rep.add("double_point_recovery", "second common point of the hyperbolas is the double point", err <= FLOAT_TOL, error=err)
    except GeometryError as exc:
        rep.add("double_point_recovery", "second common point of the hyperbolas is the double point", False, error=exc.name)
    return rep


RATIOS = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 5))


def _ratio_conic(inst: Instance, backend: Backend) -> CheckReport:
    tri, p = _convert(inst, backend)
    cfg = build_hagge(tri, p["P"])
    rep = CheckReport("ratio_conic", backend=backend.value)
    for t in RATIOS:
        t = t if backend is Backend.RATIONAL else float(t)
        sub = verify_ratio_conic(cfg, t)
        rep.add(f"six_points_on_conic_t={to_json(t)}", sub.checks[0].anchor, sub.passed)
    circ = _circle_of(midpoint_conic(cfg, 0 * cfg.P.x))
    rep.add("t0_is_circumcircle", "ratio 0 gives the circumcircle", circ is not None and same_circle(circ, circumcircle(tri)))
    pts1 = ratio_points(cfg, 1 + 0 * cfg.P.x)
    circ1 = _circle_of(midpoint_conic(cfg, 1 + 0 * cfg.P.x))
    rep.add(
        "t1_is_hagge_circle",
        "ratio 1 gives the Hagge circle",
        all(cfg.sigma.contains(q) for q in pts1) and circ1 is not None and same_circle(circ1, cfg.sigma),
    )
    return rep


def _circle_of(K) -> Optional[Circle]:
    if not is_zero(K.B) or not is_zero(K.A - K.C) or is_zero(K.A):
        return None
    return Circle(K.D / (2 * K.A), K.E / (2 * K.A), K.F / K.A)


def _double_simson(inst: Instance, backend: Backend) -> CheckReport:
    tri, p = _convert(inst, backend)
    return verify_double_simson(tri, p["P"])


def _theorem71(inst: Instance, backend: Backend) -> CheckReport:
    tri, p = _convert(inst, backend)
    return verify_orthologic(tri, similar_from_circle(tri, p["circle"], p["T"]), p["T"])


def _special(inst: Instance, backend: Backend) -> CheckReport:
    tri, _ = _convert(inst, backend)
    return special_cases(tri)


def section8_params(seed: int) -> tuple:
    rng = random.Random(f"section8:{seed}")
    while True:
        v, w, m, k = (Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(4))
        if v != w and 0 not in (v, w) and 1 + v * w != 0 and k not in (0, 1, -1):
            return v, w, m, k


def _section8(inst_seed: int, backend: Backend) -> CheckReport:
    return section8_oracle(*section8_params(inst_seed))


# suite -> (instance family or None, runner)
SUITES: dict[str, tuple] = {
    "hagge": ("hagge", _hagge),
    "speckman": ("speckman_h", _speckman),
    "section8": (None, _section8),
    "speckman_general": ("general_pair", _speckman_general),
    "ratio_conic": ("hagge", _ratio_conic),
    "double_simson": ("simson", _double_simson),
    "theorem71": ("theorem71", _theorem71),
    "special": ("triangle", _special),
}


def instance_seed(seed: int, index: int) -> int:
    return seed * 1_000_003 + index


def run_one(suite: str, seed: int, index: int, backend: str = "rational") -> CheckReport:
    """One instance of one suite; construction errors become a failed report."""
    family, runner = SUITES[suite]
    be = Backend(backend)
    iseed = instance_seed(seed, index)
    if family is None:
        inst_json: dict = {"seed": iseed}
        arg = iseed
    else:
        inst = random_instance(iseed, family)
        inst_json = inst.to_json()
        arg = inst
    try:
        with tolerance(FLOAT_TOL):
            rep = runner(arg, be)
    except GeometryError as exc:
        rep = CheckReport(suite, backend=be.value, error=exc.name)
    rep.suite = suite
    if family is None:
        rep.instance = dict(rep.instance, seed=iseed)
    else:
        rep.instance = inst_json
    return rep


def _star(args: tuple) -> CheckReport:
    return run_one(*args)


def run_suite(suite: str, instances: int, seed: int, backend: str = "rational", jobs: int = 1) -> SuiteReport:
    if suite not in SUITES:
        raise KeyError(suite)
    work = [(suite, seed, i, backend) for i in range(instances)]
    if jobs > 1 and instances > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_star, work, chunksize=max(1, instances // (4 * jobs))))
    else:
        reports = [_star(w) for w in work]
    effective = "rational" if suite == "section8" else backend
    return SuiteReport(suite, seed, effective, reports)
