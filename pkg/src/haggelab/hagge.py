"""Hagge circles: construction and property checks.

For a triangle ABC and a point P off the sidelines and the circumcircle,
AP, BP, CP meet the circumcircle again at D, E, F; reflecting those in
BC, CA, AB gives U, V, W, and the circle UVW is the Hagge circle of P.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .centers import (
    altitude,
    centroid,
    circumcenter,
    circumcircle,
    has_rational_sides,
    incenter,
    isogonal_conjugate,
    medial_triangle,
    nagel_point,
    nine_point_center,
    nine_point_circle,
    orthocenter,
    symmedian_point,
)
from .errors import (
    DegenerateConfiguration,
    PointNotOnCircumcircle,
    POnCircumcircle,
    POnSideline,
)
from .geom import (
    Circle,
    Conic,
    Line,
    Point,
    Triangle,
    all_collinear,
    circle_through,
    collinear,
    conic_contains,
    conic_through_five,
    divide,
    half_turn,
    intersect_lines,
    line_through,
    midpoint,
    parallel,
    reflect_in_line,
    same_circle,
    same_conic,
    same_point,
    second_intersection,
    simson_line,
    to_json,
)
from .report import CheckReport
from .similarity import is_indirectly_similar, similarity_from_pairs


@dataclass(frozen=True)
class HaggeConfig:
    tri: Triangle
    P: Point
    D: Point
    E: Point
    F: Point
    U: Point
    V: Point
    W: Point
    sigma: Circle
    X: Point
    Y: Point
    Z: Point
    H: Point
    Pg: Point
    Qc: Point
    point_circle: bool = False

    def hagge_triangle(self) -> Triangle:
        return Triangle(self.X, self.Y, self.Z)

    def describe(self) -> dict:
        return {"triangle": to_json(self.tri), "P": to_json(self.P)}


def build_hagge(tri: Triangle, P: Point) -> HaggeConfig:
    A, B, C = tri.vertices
    sides = tri.sides()
    if any(side.contains(P) for side in sides):
        raise POnSideline(f"{P} lies on a sideline")
    gamma = circumcircle(tri)
    if gamma.contains(P):
        raise POnCircumcircle(f"{P} lies on the circumcircle; use double_simson")
    H = orthocenter(tri)
    Pg = isogonal_conjugate(tri, P)
    D, E, F = (second_intersection(gamma, line_through(v, P), v) for v in (A, B, C))
    U, V, W = (reflect_in_line(p, side) for p, side in zip((D, E, F), sides))
    if same_point(P, H):
        # every reflection lands on H: the circle shrinks to a point
        sigma = Circle.from_center(H, 0 * H.x)
        return HaggeConfig(tri, P, D, E, F, U, V, W, sigma, H, H, H, H, Pg, H, point_circle=True)
    sigma = circle_through(U, V, W)
    X, Y, Z = (second_intersection(sigma, altitude(tri, i), H) for i in range(3))
    return HaggeConfig(tri, P, D, E, F, U, V, W, sigma, X, Y, Z, H, Pg, sigma.center)


def hagge_circle(tri: Triangle, P: Point) -> Circle:
    return build_hagge(tri, P).sigma


def peiser_center(tri: Triangle, P: Point) -> Point:
    """Predicted center of the Hagge circle: Pg turned half about the nine-point center."""
    return half_turn(isogonal_conjugate(tri, P), nine_point_center(tri))


def axis_points(cfg: HaggeConfig) -> tuple:
    """U' = VW.AH, V' = WU.BH, W' = UV.CH."""
    alt = [altitude(cfg.tri, i) for i in range(3)]
    return (
        intersect_lines(line_through(cfg.V, cfg.W), alt[0]),
        intersect_lines(line_through(cfg.W, cfg.U), alt[1]),
        intersect_lines(line_through(cfg.U, cfg.V), alt[2]),
    )


def verify_hagge_suite(cfg: HaggeConfig) -> CheckReport:
    rep = CheckReport("hagge", instance=cfg.describe(), backend=cfg.P.backend.value)
    names = [
        ("orthocenter_on_sigma", "the Hagge circle passes through H"),
        ("upx_vpy_wpz_collinear", "U,P,X / V,P,Y / W,P,Z are collinear"),
        ("center_is_peiser_point", "center of Sigma is Pg turned half about the nine-point center"),
        ("pg_h_q_o_parallelogram", "Pg,H,Q,O form a parallelogram"),
        ("au_bv_cw_midpoints_on_nine_point_circle", "midpoints of AU, BV, CW lie on the nine-point circle"),
        ("pg_g_through_h_antipode", "line Pg-G meets Sigma at the antipode of H"),
        ("axis_points_collinear_with_p", "U', V', W' and P are collinear"),
        ("indirectly_similar_pairs", "ABC~XYZ and DEF~UVW are indirect similarities"),
        ("similarity_fixes_p", "one indirect similarity maps ABCDEFP to XYZUVWP fixing P"),
    ]
    if cfg.point_circle:
        rep.records["degenerate"] = "PointCircle"
        for name, anchor in names:
            rep.add(name, anchor, True, vacuous=True)
        return rep

    tri, P, H = cfg.tri, cfg.P, cfg.H
    A, B, C = tri.vertices
    O = circumcenter(tri)
    sig = cfg.sigma
    anchors = dict(names)

    rep.add("orthocenter_on_sigma", anchors["orthocenter_on_sigma"], sig.contains(H))
    rep.add(
        "upx_vpy_wpz_collinear",
        anchors["upx_vpy_wpz_collinear"],
        collinear(cfg.U, P, cfg.X) and collinear(cfg.V, P, cfg.Y) and collinear(cfg.W, P, cfg.Z),
    )
    peiser = peiser_center(tri, P)
    rep.add("center_is_peiser_point", anchors["center_is_peiser_point"], same_point(cfg.Qc, peiser))
    rep.add(
        "pg_h_q_o_parallelogram",
        anchors["pg_h_q_o_parallelogram"],
        same_point(midpoint(cfg.Pg, cfg.Qc), midpoint(H, O)),
    )
    npc = nine_point_circle(tri)
    rep.add(
        "au_bv_cw_midpoints_on_nine_point_circle",
        anchors["au_bv_cw_midpoints_on_nine_point_circle"],
        all(npc.contains(midpoint(v, q)) for v, q in zip((A, B, C), (cfg.U, cfg.V, cfg.W))),
    )
    antipode = half_turn(H, cfg.Qc)
    rep.add(
        "pg_g_through_h_antipode",
        anchors["pg_g_through_h_antipode"],
        line_through(cfg.Pg, centroid(tri)).contains(antipode),
        antipode=to_json(antipode),
    )
    Up, Vp, Wp = axis_points(cfg)
    rep.add("axis_points_collinear_with_p", anchors["axis_points_collinear_with_p"], all_collinear((Up, Vp, Wp, P)))
    XYZ = cfg.hagge_triangle()
    rep.add(
        "indirectly_similar_pairs",
        anchors["indirectly_similar_pairs"],
        is_indirectly_similar(tri, XYZ)
        and is_indirectly_similar(Triangle(cfg.D, cfg.E, cfg.F), Triangle(cfg.U, cfg.V, cfg.W)),
    )
    sim = similarity_from_pairs(A, cfg.X, B, cfg.Y)
    images = [sim(p) for p in (C, cfg.D, cfg.E, cfg.F, P)]
    targets = [cfg.Z, cfg.U, cfg.V, cfg.W, P]
    rep.add(
        "similarity_fixes_p",
        anchors["similarity_fixes_p"],
        all(same_point(i, t) for i, t in zip(images, targets)) and same_point(sim.center, P),
        center=to_json(sim.center),
    )
    return rep


def ratio_points(cfg: HaggeConfig, t) -> list:
    """Points dividing DU, EV, FW, AX, BY, CZ in the ratio t."""
    A, B, C = cfg.tri.vertices
    pairs = ((cfg.D, cfg.U), (cfg.E, cfg.V), (cfg.F, cfg.W), (A, cfg.X), (B, cfg.Y), (C, cfg.Z))
    return [divide(p, q, t) for p, q in pairs]


def midpoint_conic(cfg: HaggeConfig, t) -> Conic:
    """Conic fitted through five of the six ratio-t points.

    The first five are tried first; if they do not fix a unique conic the
    other five-point subsets are tried in order.  Whether the left-out
    point lies on the result is for the caller to check.
    """
    pts = ratio_points(cfg, t)
    for idx in combinations(range(6), 5):
        try:
            return conic_through_five(*(pts[i] for i in idx))
        except DegenerateConfiguration:
            continue
    raise DegenerateConfiguration(f"ratio-{t} points fix no unique conic")


def verify_ratio_conic(cfg: HaggeConfig, t) -> CheckReport:
    rep = CheckReport("ratio_conic", instance=dict(cfg.describe(), t=to_json(t)), backend=cfg.P.backend.value)
    K = midpoint_conic(cfg, t)
    rep.add(
        "six_points_on_conic",
        "the six ratio-t points lie on one conic",
        all(conic_contains(K, p) for p in ratio_points(cfg, t)),
        conic=to_json(K),
    )
    return rep


def double_simson(tri: Triangle, P: Point) -> Line:
    """Line through the reflections of a circumcircle point in the sidelines."""
    if not circumcircle(tri).contains(P):
        raise PointNotOnCircumcircle(f"{P} is not on the circumcircle")
    refl = [reflect_in_line(P, side) for side in tri.sides()]
    if not all_collinear(refl):
        raise DegenerateConfiguration("reflections are not collinear")
    distinct = [refl[0]] + [r for r in refl[1:] if not same_point(r, refl[0])]
    return line_through(distinct[0], distinct[1])


def verify_double_simson(tri: Triangle, P: Point) -> CheckReport:
    rep = CheckReport("double_simson", instance={"triangle": to_json(tri), "P": to_json(P)}, backend=P.backend.value)
    refl = [reflect_in_line(P, side) for side in tri.sides()]
    rep.add("reflections_collinear", "reflections of P in the sidelines are collinear", all_collinear(refl))
    line = double_simson(tri, P)
    rep.add("contains_orthocenter", "the double Simson line passes through H", line.contains(orthocenter(tri)))
    rep.add("parallel_to_simson", "the double Simson line is parallel to the Simson line", parallel(line, simson_line(tri, P)))
    return rep


def _unit_scaled(tri: Triangle) -> Triangle:
    """Float copy with circumcenter at the origin and circumradius 1."""
    f = tri.to_float()
    O = circumcenter(f)
    r = math.sqrt(circumcircle(f).radius_sq)
    return Triangle(*((v - O) / r for v in f.vertices))


FLOAT_TOL = 1e-9


def _close(p: Point, q: Point, tol: float) -> bool:
    return abs(float(p.x - q.x)) <= tol and abs(float(p.y - q.y)) <= tol


def special_cases(tri: Triangle) -> CheckReport:
    """Fuhrmann, orthocentroidal and Brocard circles as Hagge circles.

    The Fuhrmann check is exact when all side lengths are rational and
    otherwise runs in floats on a unit-circumradius copy at 1e-9.
    """
    exact = has_rational_sides(tri)
    rep = CheckReport("special_cases", instance={"triangle": to_json(tri)}, backend=tri.backend.value)
    work = tri if exact else _unit_scaled(tri)
    I, Na = incenter(work), nagel_point(work)
    cfg = build_hagge(work, I)
    if exact:
        ok = cfg.sigma.contains(Na) and same_point(midpoint(cfg.H, Na), cfg.sigma.center)
    else:
        ok = abs(cfg.sigma.power(Na)) <= FLOAT_TOL and _close(midpoint(cfg.H, Na), cfg.sigma.center, FLOAT_TOL)
    rep.add(
        "fuhrmann",
        "Hagge circle of the incenter passes through the Nagel point with H-Na a diameter",
        ok,
        exact=exact,
        nagel=to_json(Na),
    )
    K, G, H, O = symmedian_point(tri), centroid(tri), orthocenter(tri), circumcenter(tri)
    rep.add(
        "orthocentroidal",
        "Hagge circle of K is the circle on GH as diameter",
        same_circle(build_hagge(tri, K).sigma, Circle.on_diameter(G, H)),
    )
    rep.add(
        "brocard",
        "Hagge circle of G in the medial triangle is the circle on OK as diameter",
        same_circle(build_hagge(medial_triangle(tri), G).sigma, Circle.on_diameter(O, K)),
    )
    return rep


def same_as_conic(K: Conic, c: Circle) -> bool:
    return same_conic(K, c.as_conic())
