"""Indirectly similar triangles in perspective.

Perspectors, Desargues axes, orthologic and paralogic centers, the pair of
rectangular hyperbolas through the two triangles, and the paragraph checks
run over such a pair.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .centers import altitude, circumcircle, medial_triangle, orthocenter
from .errors import (
    CoincidentLines,
    DegenerateConfiguration,
    GeometryError,
    InvalidRatio,
    NoRealSecondIntersection,
    NotIndirectlySimilar,
    NotOrthologic,
    NotParalogic,
    NotPerspective,
    ParallelLines,
    ParallelPerspective,
    ParallelSides,
    PointNotOnCircle,
)
from .geom import (
    Circle,
    Conic,
    Line,
    Point,
    Triangle,
    collinear,
    concurrent,
    concyclic,
    conic_center,
    conic_contains,
    conic_through,
    half_turn,
    intersect_lines,
    is_rectangular,
    line_through,
    midpoint,
    parallel,
    parallel_through,
    perpendicular,
    perpendicular_through,
    quadratic_parts_proportional,
    radical_axis,
    radical_center,
    reflect_in_line,
    circle_through,
    same_line,
    same_point,
    second_intersection,
    to_json,
)
from .numeric import coerce
from .report import CheckReport
from .similarity import (
    IndirectSimilarity,
    is_indirectly_similar,
    map_between,
    reflect_dilate,
)

def apply(sim: IndirectSimilarity, p: Point) -> Point:
    return sim.apply(p)


def _common_point(lines: list) -> Point:
    """Point shared by three lines, or NotPerspective / ParallelPerspective."""
    l0, l1, l2 = lines
    try:
        Q = intersect_lines(l0, l1)
    except ParallelLines:
        if parallel(l0, l2):
            raise ParallelPerspective("joining lines are parallel", direction=l0.direction) from None
        raise NotPerspective("two joining lines are parallel, the third is not") from None
    except CoincidentLines:
        try:
            Q = intersect_lines(l0, l2)
        except (ParallelLines, CoincidentLines):
            raise NotPerspective("joining lines do not fix a single point") from None
    if not l2.contains(Q):
        raise NotPerspective("joining lines are not concurrent")
    return Q


def perspector(t1: Triangle, t2: Triangle) -> Point:
    pairs = [(p, q) for p, q in zip(t1.vertices, t2.vertices) if not same_point(p, q)]
    if len(pairs) == 3:
        return _common_point([line_through(p, q) for p, q in pairs])
    if len(pairs) < 2:
        raise DegenerateConfiguration("two shared vertices leave the center undetermined")
    # a shared vertex puts no condition on the center
    l1, l2 = (line_through(p, q) for p, q in pairs)
    try:
        return intersect_lines(l1, l2)
    except ParallelLines:
        raise ParallelPerspective("joining lines are parallel", direction=l1.direction) from None
    except CoincidentLines:
        raise DegenerateConfiguration("joining lines coincide") from None


def desargues_axis(t1: Triangle, t2: Triangle) -> Line:
    s1, s2 = t1.sides(), t2.sides()
    try:
        pts = [intersect_lines(a, b) for a, b in zip(s1, s2)]
    except (ParallelLines, CoincidentLines) as exc:
        raise ParallelSides(f"corresponding sides do not meet in one point: {exc}") from None
    L, M, N = pts
    if not collinear(L, M, N):
        raise NotPerspective("side intersections are not collinear")
    distinct = [L] + [p for p in (M, N) if not same_point(p, L)]
    if len(distinct) < 2:
        raise DegenerateConfiguration("all three side intersections coincide")
    return line_through(distinct[0], distinct[1])


def _perp_center(src: Triangle, dst: Triangle) -> Point:
    """Common point of the perpendiculars from src's vertices to dst's opposite sides."""
    lines = [perpendicular_through(v, side) for v, side in zip(src.vertices, dst.sides())]
    if not concurrent(*lines):
        raise NotOrthologic("perpendiculars are not concurrent")
    try:
        return intersect_lines(lines[0], lines[1])
    except CoincidentLines:
        return intersect_lines(lines[0], lines[2])


def orthologic_centers(t1: Triangle, t2: Triangle) -> tuple:
    """(center of t1 with respect to t2, center of t2 with respect to t1).

    The first is where the perpendiculars from A, B, C to YZ, ZX, XY meet
    and lies on the circumcircle of t1; the second comes from X, Y, Z onto
    BC, CA, AB and lies on the circumcircle of t2.
    """
    if not is_indirectly_similar(t1, t2):
        raise NotIndirectlySimilar("triangles are not indirectly similar")
    return _perp_center(t1, t2), _perp_center(t2, t1)


def paralogic_center(t1: Triangle, t2: Triangle) -> Point:
    """Meeting point of the parallels through A, B, C to YZ, ZX, XY."""
    lines = [parallel_through(v, side) for v, side in zip(t1.vertices, t2.sides())]
    if not concurrent(*lines):
        raise NotParalogic("parallels are not concurrent")
    try:
        return intersect_lines(lines[0], lines[1])
    except CoincidentLines:
        return intersect_lines(lines[0], lines[2])
    except ParallelLines:
        raise NotParalogic("parallels meet only at infinity") from None


@dataclass(frozen=True)
class SpeckmanConfig:
    """Two indirectly similar triangles in perspective and their derived points.

    ``P`` is the fixed point of the similarity, ``Q`` the perspector, ``H``
    and ``h`` the two orthocenters.  ``T1`` is the orthologic center of
    ``tri`` (on its circumcircle), ``T2`` that of ``image``.  ``S`` and
    ``s`` are the paralogic centers.
    """

    tri: Triangle
    image: Triangle
    sim: IndirectSimilarity
    P: Point
    Q: Point
    H: Point
    h: Point
    hyp: Conic
    hyp2: Conic
    M: Point
    m: Point
    S: Point
    s: Point
    T1: Point
    T2: Point

    def describe(self) -> dict:
        return {"triangle": to_json(self.tri), "image": to_json(self.image)}


def build_speckman(tri: Triangle, image: Triangle) -> SpeckmanConfig:
    ab = map_between(tri, image)
    if ab is None:
        raise NotIndirectlySimilar("image is not an indirectly similar copy")
    sim = IndirectSimilarity.from_parts(*ab)
    if sim.center is None:
        raise DegenerateConfiguration("similarity ratio is 1: no double point")
    P = sim.center
    Q = perspector(tri, image)
    H, h = orthocenter(tri), orthocenter(image)
    A, B, C = tri.vertices
    X, Y, Z = image.vertices
    hyp = conic_through([A, B, C, H, P, Q], rectangular=True)
    hyp2 = conic_through([X, Y, Z, h, P, Q], rectangular=True)
    T1, T2 = orthologic_centers(tri, image)
    return SpeckmanConfig(
        tri, image, sim, P, Q, H, h, hyp, hyp2,
        conic_center(hyp), conic_center(hyp2),
        paralogic_center(tri, image), paralogic_center(image, tri),
        T1, T2,
    )


def build_speckman_through_H(tri: Triangle, m_slope, k) -> SpeckmanConfig:
    """Dilate ``tri`` by ``k`` about its orthocenter, then reflect in the line
    of slope ``m_slope`` through it."""
    m_slope, k = coerce(m_slope, tri.backend), coerce(k, tri.backend)
    one = k * 0 + 1
    if k == 0 or k == one or k == -one:
        # k = -1 is the reflection in the perpendicular axis: AX, BY, CZ parallel
        raise InvalidRatio(f"enlargement factor {k} gives no perspective")
    H = orthocenter(tri)
    sim = reflect_dilate(H, m_slope, k)
    image = Triangle(*(sim(v) for v in tri.vertices))
    return build_speckman(tri, image)


def similar_from_circle(tri: Triangle, c: Circle, T: Point) -> Triangle:
    """Lines through T parallel to the altitudes meet ``c`` again at X, Y, Z."""
    if not c.contains(T):
        raise PointNotOnCircle(f"{T} is not on {c}")
    pts = []
    for i in range(3):
        alt = altitude(tri, i)
        pts.append(second_intersection(c, parallel_through(T, alt), T))
    return Triangle(*pts)


def verify_orthologic(tri: Triangle, image: Triangle, T: Optional[Point] = None) -> CheckReport:
    """Both orthologic concurrencies for an indirectly similar pair.

    With ``T`` given (the point ``similar_from_circle`` started from) it must
    be the center of ``image`` with respect to ``tri``.
    """
    rep = CheckReport("theorem71", instance={"triangle": to_json(tri), "image": to_json(image)}, backend=tri.backend.value)
    rep.add("indirectly_similar", "the pair is indirectly similar", is_indirectly_similar(tri, image))
    first = [perpendicular_through(v, side) for v, side in zip(tri.vertices, image.sides())]
    second = [perpendicular_through(v, side) for v, side in zip(image.vertices, tri.sides())]
    rep.add("first_concurrency", "perpendiculars from A, B, C to YZ, ZX, XY concur", concurrent(*first))
    rep.add("second_concurrency", "perpendiculars from X, Y, Z to BC, CA, AB concur", concurrent(*second))
    try:
        c1, c2 = orthologic_centers(tri, image)
    except (NotOrthologic, NotIndirectlySimilar) as exc:
        rep.add("centers_on_circumcircles", "each center lies on its triangle's circumcircle", False, error=type(exc).__name__)
        return rep
    rep.add(
        "centers_on_circumcircles",
        "each center lies on its triangle's circumcircle",
        circumcircle(tri).contains(c1) and circumcircle(image).contains(c2),
        first=to_json(c1),
        second=to_json(c2),
    )
    if T is not None:
        rep.add("start_point_is_center", "the construction point is the center of XYZ", same_point(c2, T))
    return rep


def speckman_from_hagge(cfg) -> SpeckmanConfig:
    """ABC and its Hagge triangle XYZ (perspective from H, double point P)."""
    return build_speckman(cfg.tri, cfg.hagge_triangle())


def perspective_image(tri: Triangle, Q: Point, scale) -> Triangle:
    """Indirectly similar copy of ``tri`` in perspective from ``Q``.

    For a fixed Q the maps z -> a*conj(z) + b that put each image vertex on
    the line from Q through the original form a line through (0, Q) in
    (a, b)-space; ``scale`` picks the point on it (a dilation about Q).
    """
    from . import linalg

    rows = []
    for V in tri.vertices:
        d = V - Q
        # cross(a*conj(V) + b - Q, V - Q) = 0, homogeneous part in (ar, ai, br, bi)
        rows.append([V.x * d.y + V.y * d.x, V.y * d.y - V.x * d.x, d.y, -d.x])
    basis = linalg.nullspace(rows)
    if len(basis) != 1:
        raise DegenerateConfiguration(f"perspective family has dimension {len(basis)}")
    v = basis[0]
    a = Point(scale * v[0], scale * v[1])
    if a.x == 0 and a.y == 0:
        raise DegenerateConfiguration("zero multiplier")
    b = Point(Q.x + scale * v[2], Q.y + scale * v[3])
    sim = IndirectSimilarity(a, b)
    return Triangle(*(sim(V) for V in tri.vertices))


# --- paragraph checks -------------------------------------------------------

# chord slopes through A used to sample rational points on the hyperbola
_CHORD_SLOPES = [Fraction(n, d) for n, d in ((1, 3), (-2, 1), (5, 2), (7, 1), (-1, 4), (3, 5))]

# exceptions that mean a claimed incidence failed, as opposed to a degenerate input
_THEOREM_ERRORS = (NotPerspective, NotOrthologic, NotParalogic, NotIndirectlySimilar, PointNotOnCircle)


def _points_on_conic(K: Conic, through: Point, count: int = 2) -> list:
    out = []
    for s in _CHORD_SLOPES:
        A, B, C, D, E, _ = K.coefficients
        dx, dy = s * 0 + 1, s
        q2 = A * dx * dx + B * dx * dy + C * dy * dy
        if q2 == 0:
            continue
        q1 = 2 * A * through.x * dx + B * (through.x * dy + through.y * dx) + 2 * C * through.y * dy + D * dx + E * dy
        t = -q1 / q2
        if t == 0:
            continue
        out.append(Point(through.x + t * dx, through.y + t * dy))
        if len(out) == count:
            break
    return out


def _mod_quarter_turn_distance(a: float, b: float) -> float:
    q = math.pi / 2
    d = (a - b) % q
    return min(d, q - d)


def _line_angle(l: Line) -> float:
    return math.atan2(float(l.direction.y), float(l.direction.x))


FLOAT_TOL = 1e-9


def verify_speckman_suite(cfg: SpeckmanConfig) -> CheckReport:
    """Paragraph-by-paragraph checks for a perspective pair.

    Every check is exact except ``double_lines_bisect_sides`` (angles, in
    floats at 1e-9).  Degenerate inputs raise; a failed incidence becomes a
    failing check.
    """
    rep = CheckReport("speckman", instance=cfg.describe(), backend=cfg.P.backend.value)
    tri, img = cfg.tri, cfg.image
    A, B, C = tri.vertices
    X, Y, Z = img.vertices
    P, Q, H, h, T1, T2 = cfg.P, cfg.Q, cfg.H, cfg.h, cfg.T1, cfg.T2
    gamma, circ2 = circumcircle(tri), circumcircle(img)
    O, O2 = gamma.center, circ2.center
    rep.records.update({k: to_json(getattr(cfg, k)) for k in ("P", "Q", "H", "h", "M", "m", "S", "s", "T1", "T2")})

    def guarded(name, anchor, fn):
        try:
            ok, detail = fn()
        except _THEOREM_ERRORS as exc:
            rep.add(name, anchor, False, error=type(exc).__name__)
            return
        except GeometryError as exc:
            rep.records.setdefault("skipped", {})[name] = type(exc).__name__
            return
        rep.add(name, anchor, ok, **(detail or {}))

    cache: dict = {}

    def axis_line() -> Line:
        if "axis" not in cache:
            cache["axis"] = desargues_axis(tri, img)
        return cache["axis"]

    def reflected() -> Triangle:
        if "img2" not in cache:
            ax = axis_line()
            cache["img2"] = Triangle(*(reflect_in_line(v, ax) for v in img.vertices))
        return cache["img2"]

    def p1():
        on1 = all(conic_contains(cfg.hyp, p) for p in (A, B, C, H, P, Q))
        on2 = all(conic_contains(cfg.hyp2, p) for p in (X, Y, Z, h, P, Q))
        rect = is_rectangular(cfg.hyp) and is_rectangular(cfg.hyp2)
        return on1 and on2 and rect and quadratic_parts_proportional(cfg.hyp, cfg.hyp2), None

    guarded("parallel_asymptotes", "rectangular hyperbolas ABCHPQ and XYZhPQ have parallel asymptotes", p1)

    def p2():
        axis = cfg.sim.axis_angle()
        worst = max(
            _mod_quarter_turn_distance((_line_angle(s1) + _line_angle(s2)) / 2, axis)
            for s1, s2 in zip(tri.sides(), img.sides())
        )
        return worst <= FLOAT_TOL, {"max_angle_error": worst}

    guarded("double_lines_bisect_sides", "double lines are parallel to bisectors of corresponding sides", p2)

    samples = _points_on_conic(cfg.hyp, A)

    def p3():
        ok = True
        for J in samples:
            j = cfg.sim(J)
            J2, j2 = half_turn(J, cfg.M), half_turn(j, cfg.m)
            ok &= conic_contains(cfg.hyp2, j) and collinear(J, j2, P) and collinear(J2, j, P)
        return ok and bool(samples), {"samples": len(samples)}

    guarded("half_turn_collinearity", "J, half-turned j, and P are collinear (and symmetrically)", p3)

    def p4():
        A0 = Triangle(*(half_turn(v, cfg.M) for v in tri.vertices))
        ok = is_indirectly_similar(A0, img)
        ok &= same_point(perspector(A0, img), P)
        ab = map_between(A0, img)
        dbl = IndirectSimilarity.from_parts(*ab).center if ab else None
        ok &= dbl is not None and same_point(dbl, Q)
        ok &= same_point(orthocenter(A0), T1)
        return ok, None

    guarded("half_turn_triangle", "ABC turned half about M is in perspective with XYZ from P, double point Q, orthocenter T1", p4)

    def p5():
        ok = True
        for J in samples:
            j = cfg.sim(J)
            ok &= concyclic(J, j, half_turn(J, cfg.M), half_turn(j, cfg.m))
        return ok and bool(samples), None

    guarded("half_turn_concyclic", "J, j and their half-turns about M, m are concyclic", p5)
    guarded("orthocenters_collinear_with_perspector", "H, h, Q are collinear", lambda: (collinear(H, h, Q), None))
    guarded(
        "orthologic_orthocenter_lines",
        "h-T1 and H-T2 pass through the double point",
        lambda: (collinear(h, T1, P) and collinear(H, T2, P), None),
    )

    def p10():
        if same_point(T1, T2):
            raise DegenerateConfiguration("orthologic centers coincide")
        return perpendicular(axis_line(), line_through(T1, T2)), None

    guarded("axis_perpendicular_to_orthologic_line", "Desargues axis is perpendicular to T1-T2", p10)
    guarded(
        "paralogic_centers_on_circumcircles",
        "S is on circle ABC and s on circle XYZ",
        lambda: (gamma.contains(cfg.S) and circ2.contains(cfg.s), None),
    )
    guarded(
        "orthologic_diameters",
        "T1-S and T2-s are diameters of circles ABC and XYZ",
        lambda: (same_point(midpoint(T1, cfg.S), O) and same_point(midpoint(T2, cfg.s), O2), None),
    )

    # recorded, not asserted
    try:
        R = intersect_lines(line_through(T1, cfg.S), line_through(T2, cfg.s))
        rep.records["diameter_intersection"] = {
            "R": to_json(R),
            "on_hyp_ABC": conic_contains(cfg.hyp, R),
            "on_hyp_XYZ": conic_contains(cfg.hyp2, R),
            "s_on_hyp_ABC": conic_contains(cfg.hyp, cfg.s),
        }
    except GeometryError as exc:
        rep.records["diameter_intersection"] = {"error": type(exc).__name__}

    med = medial_triangle(tri)

    def p14():
        lines = [perpendicular_through(v, side) for v, side in zip(med.vertices, img.sides())]
        target = midpoint(H, cfg.S)
        return concurrent(*lines) and all(l.contains(target) for l in lines), None

    guarded("medial_perpendiculars", "perpendiculars from the side midpoints meet at the midpoint of HS", p14)

    def p15():
        c = paralogic_center(med, img)
        return same_point(c, midpoint(T1, H)) and same_point(c, cfg.M), None

    guarded("medial_paralogic_center", "paralogic center of the medial triangle is the midpoint of T1-H, the center M", p15)

    def p16():
        q2 = perspector(tri, reflected())
        if same_point(T1, T2):
            raise DegenerateConfiguration("orthologic centers coincide")
        other = second_intersection(gamma, line_through(T1, T2), T1)
        if same_point(q2, other):
            return True, {"vertex": "second intersection"}
        return same_point(q2, T1), {"vertex": "T1" if same_point(q2, T1) else "neither"}

    guarded("reflected_image_perspective", "XYZ reflected in the axis is in perspective with ABC from a circumcircle point on T1-T2", p16)
    guarded(
        "axis_bisects_paralogic_segment",
        "the Desargues axis passes through the midpoint of S-s",
        lambda: (axis_line().contains(midpoint(cfg.S, cfg.s)), None),
    )

    def p18():
        circ3 = circle_through(*reflected().vertices)
        E = intersect_lines(axis_line(), radical_axis(gamma, circ3))
        target = radical_axis(gamma, circ2)
        through_E = perpendicular_through(E, line_through(O, O2))
        if circ3 == circ2:
            # the axis runs through the center of circle XYZ: no radical center
            return same_line(through_E, target), {"radical_center": "undefined"}
        return same_point(E, radical_center(gamma, circ2, circ3)) and same_line(through_E, target), None

    guarded("radical_center", "axis meets the common chord at the radical center of the three circles", p18)

    if same_point(P, H):
        # the Hagge circle of H is a point: nothing to rotate
        rep.records["not_applicable"] = ["rotation_about_double_point"]
    else:
        guarded(
            "rotation_about_double_point",
            "XYZ is a rotated dilation about P of the Hagge triangle of P",
            lambda: (_equal_ratios(rotation_to_hagge_triangle(cfg)), None),
        )
    return rep


def _equal_ratios(ratios: list) -> bool:
    return all(same_point(ratios[0], r) for r in ratios[1:])


def rotation_to_hagge_triangle(cfg: SpeckmanConfig):
    """Complex ratios (A' - P)/(X_h - P) for the Hagge triangle of P.

    The image triangle is a rotated, dilated copy of the Hagge triangle of
    the double point about that point exactly when the three ratios agree.
    Returns the three ratios.
    """
    from .hagge import build_hagge
    from .similarity import cdiv

    hg = build_hagge(cfg.tri, cfg.P).hagge_triangle()
    return [cdiv(a - cfg.P, x - cfg.P) for a, x in zip(cfg.image.vertices, hg.vertices)]


# --- double point by conic intersection (floats) ----------------------------


def _cross_matrix(p):
    return np.array([[0, p[2], -p[1]], [-p[2], 0, p[0]], [p[1], -p[0], 0]], dtype=complex)


def _split_degenerate(M: np.ndarray) -> list:
    """Split a rank <= 2 symmetric conic matrix into its two lines."""
    Bm = np.array(
        [[M[(i + 1) % 3][(j + 1) % 3] * M[(i + 2) % 3][(j + 2) % 3] - M[(i + 1) % 3][(j + 2) % 3] * M[(i + 2) % 3][(j + 1) % 3]
          for i in range(3)] for j in range(3)],
        dtype=complex,
    )
    i = int(np.argmax(np.abs(np.diag(Bm))))
    if abs(Bm[i, i]) < 1e-14 * max(1.0, np.abs(M).max() ** 2):
        # double line: any nonzero row
        r = int(np.argmax(np.abs(M).sum(axis=1)))
        return [M[r].astype(complex)]
    beta = np.sqrt(-Bm[i, i])
    p = Bm[:, i] / beta
    Cm = M.astype(complex) + _cross_matrix(p)
    r, c = np.unravel_index(int(np.argmax(np.abs(Cm))), Cm.shape)
    return [Cm[r, :], Cm[:, c]]


def _line_conic_points(line: np.ndarray, K: np.ndarray) -> list:
    """Real affine intersections of a homogeneous line with a conic."""
    if np.abs(line.imag).max() > 1e-8 * np.abs(line).max():
        return []
    l = line.real
    # two homogeneous points spanning the line
    basis = np.linalg.svd(l.reshape(1, 3))[2][1:]
    p, q = basis[0], basis[1]
    a, b, c = q @ K @ q, 2 * (p @ K @ q), p @ K @ p
    if abs(a) < 1e-15:
        roots = [np.inf] if abs(b) < 1e-15 else [-c / b]
    else:
        disc = b * b - 4 * a * c
        if disc < -1e-12 * max(1.0, b * b):
            return []
        sq = math.sqrt(max(disc, 0.0))
        roots = [(-b + sq) / (2 * a), (-b - sq) / (2 * a)]
    out = []
    for t in roots:
        h = q.copy() if t == np.inf else p + t * q
        if abs(h[2]) > 1e-10 * np.abs(h).max():
            out.append((h[0] / h[2], h[1] / h[2]))
    return out


def _newton_polish(K1, K2, x, y, steps=3):
    for _ in range(steps):
        v = np.array([x, y, 1.0])
        f = np.array([v @ K1 @ v, v @ K2 @ v])
        J = np.array([2 * (K1 @ v)[:2], 2 * (K2 @ v)[:2]])
        try:
            dx = np.linalg.solve(J, -f)
        except np.linalg.LinAlgError:
            break
        x, y = x + dx[0], y + dx[1]
    return x, y


def _perspective_hyperbola(t: Triangle, Q: Point, partner: Optional[Conic] = None) -> Conic:
    """Rectangular hyperbola through t's vertices, orthocenter and Q.

    For a right triangle whose right angle sits at Q those points leave a
    one-parameter family; ``partner`` then picks the member whose
    asymptotes are parallel to its own.
    """
    points = [*t.vertices, orthocenter(t), Q]
    try:
        return conic_through(points, rectangular=True)
    except DegenerateConfiguration:
        if partner is None:
            raise
    # the quadratic part of a rectangular conic is (A, B, -A); match its ratio
    return conic_through(points, rectangular=True, extra_rows=[[partner.B, -partner.A, 0, 0, 0, 0]])


def double_point_from_hyperbolas(t1: Triangle, t2: Triangle, Q: Point) -> Point:
    """Second common point (besides Q) of the hyperbolas ABCHQ and A'B'C'H'Q.

    The pencil K1 - t*K2 is degenerate at the real roots of a cubic in t;
    each degenerate member splits into lines whose meets with K1 are the
    candidates.  Returned in floats.
    """
    if not is_indirectly_similar(t1, t2):
        raise NotIndirectlySimilar("triangles are not indirectly similar")
    try:
        K1c = _perspective_hyperbola(t1, Q)
        K2c = _perspective_hyperbola(t2, Q, K1c)
    except DegenerateConfiguration:
        K2c = _perspective_hyperbola(t2, Q)
        K1c = _perspective_hyperbola(t1, Q, K2c)
    # work at unit scale around Q
    pts = [v.to_float() for v in (*t1.vertices, *t2.vertices)]
    q = Q.to_float()
    scale = max(max(abs(p.x - q.x), abs(p.y - q.y)) for p in pts) or 1.0
    T = np.array([[scale, 0, q.x], [0, scale, q.y], [0, 0, 1.0]])

    def mat(K):
        m = np.array([[float(v) for v in row] for row in K.matrix()])
        m = T.T @ m @ T
        return m / np.abs(m).max()

    K1, K2 = mat(K1c), mat(K2c)
    # det(K1 - t K2) as a cubic in t, sampled and fitted exactly
    ts = np.array([-1.0, 0.0, 1.0, 2.0])
    coeffs = np.polyfit(ts, [np.linalg.det(K1 - t * K2) for t in ts], 3)
    if np.abs(coeffs).max() < 1e-12:
        raise DegenerateConfiguration("every conic of the pencil is degenerate: the hyperbolas share a line")
    candidates = []
    for root in np.roots(coeffs):
        if abs(root.imag) > 1e-7:
            continue
        Mt = K1 - root.real * K2
        for line in _split_degenerate(Mt):
            candidates.extend(_line_conic_points(line, K1))
    found = []
    for x, y in candidates:
        x, y = _newton_polish(K1, K2, x, y)
        if math.hypot(x, y) < 1e-6:
            continue  # that is Q
        if any(math.hypot(x - a, y - b) < 1e-6 for a, b in found):
            continue
        v = np.array([x, y, 1.0])
        if abs(v @ K1 @ v) < 1e-8 and abs(v @ K2 @ v) < 1e-8:
            found.append((x, y))
    if not found:
        raise NoRealSecondIntersection("hyperbolas share no real point besides Q")
    x, y = found[0]
    return Point(float(q.x + scale * x), float(q.y + scale * y))
