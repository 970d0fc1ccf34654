from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from haggelab.centers import centroid, circumcircle, orthocenter
from haggelab.errors import (
    DegenerateConfiguration,
    InvalidRatio,
    NotIndirectlySimilar,
    NotParalogic,
    NotPerspective,
    ParallelSides,
    PointNotOnCircle,
    RatioOne,
)
from haggelab.geom import (
    Circle,
    Triangle,
    circle_through,
    collinear,
    conic_contains,
    conic_through_five,
    dist_sq,
    intersect_lines,
    line_through,
    perpendicular,
    reflect_in_line,
    second_intersection,
)
from haggelab.hagge import build_hagge
from haggelab.similarity import cmul, is_indirectly_similar, reflect_dilate, similarity_from_pairs
from haggelab.speckman import (
    apply,
    build_speckman,
    build_speckman_through_H,
    desargues_axis,
    double_point_from_hyperbolas,
    orthologic_centers,
    paralogic_center,
    perspective_image,
    perspector,
    similar_from_circle,
    verify_orthologic,
    verify_speckman_suite,
)

from .conftest import S8, T1, P, points, triangle_and_point, triangles

T1_CENTER = P(F(324, 193), F(768, 193))
SCALENE = Triangle(P(0, 0), P(6, 0), P(1, 4))


@pytest.fixture(scope="module")
def hagge_t1():
    return build_hagge(T1, centroid(T1))


@pytest.fixture(scope="module")
def family():
    return build_speckman_through_H(S8, 1, 2)


class TestSimilarity:
    def test_scaling_pair(self):
        sim = similarity_from_pairs(P(0, 0), P(0, 0), P(1, 0), P(2, 0))
        assert sim.multiplier == P(2, 0) and sim.offset == P(0, 0) and sim.center == P(0, 0)

    def test_hagge_pair_fixes_p(self, hagge_t1):
        c = hagge_t1
        sim = similarity_from_pairs(T1.A, c.X, T1.B, c.Y)
        assert sim.center == P(F(4, 3), 1)
        assert [sim(p) for p in (T1.C, c.D, c.E, c.F)] == [c.Z, c.U, c.V, c.W]

    def test_ratio_one(self):
        with pytest.raises(RatioOne):
            similarity_from_pairs(P(0, 0), P(1, 1), P(1, 0), P(1, 2))

    def test_reflect_then_dilate(self):
        sim = reflect_dilate(P(0, 0), F(1), F(2))
        assert apply(sim, P(-8, 0)) == P(0, -16)
        assert apply(sim, sim.center) == sim.center

    @given(points, points, points, points, points)
    def test_square_is_direct(self, a, b, c, d, z):
        assume(a != b and c != d)
        try:
            sim = similarity_from_pairs(a, c, b, d)
        except RatioOne:
            return
        k, off = sim.square()
        twice = sim(sim(z))
        assert twice == P(k.x * z.x - k.y * z.y + off.x, k.x * z.y + k.y * z.x + off.y)
        assert sim(sim.center) == sim.center


class TestFamilyThroughH:
    def test_family_instance(self, family):
        assert family.image == Triangle(P(0, -12), P(4, -8), P(8, -8))
        assert family.Q == P(-12, 12)
        assert circle_through(*family.image.vertices) == Circle(-6, 14, 192)

    def test_unit_ratio_rejected(self):
        with pytest.raises(InvalidRatio):
            build_speckman_through_H(S8, 1, 1)
        with pytest.raises(InvalidRatio):
            build_speckman_through_H(S8, 1, -1)

    def test_suite(self, family):
        rep = verify_speckman_suite(family)
        assert rep.passed, [c.name for c in rep.failures()]

    @settings(max_examples=25)
    @given(triangles(), st.fractions(-20, 20, max_denominator=20), st.fractions(-20, 20, max_denominator=20))
    def test_perspector_always_exists(self, tri, m, k):
        assume(k not in (0, 1, -1))
        cfg = build_speckman_through_H(tri, m, k)
        assert all(line_through(a, x).contains(cfg.Q) for a, x in zip(tri.vertices, cfg.image.vertices) if a != x)


class TestPerspective:
    def test_family_perspector(self, family):
        assert perspector(family.tri, family.image) == P(-12, 12)

    def test_hagge_pair_perspective_from_h(self, hagge_t1):
        assert perspector(T1, hagge_t1.hagge_triangle()) == P(0, 0)

    def test_generic_pair(self):
        with pytest.raises(NotPerspective):
            perspector(SCALENE, Triangle(P(1, 1), P(7, 2), P(3, 9)))

    def test_desargues_axis(self):
        # a perspective pair built from a center and three points on its rays
        O = P(1, 1)
        image = Triangle(*(O + (v - O) * t for v, t in zip(SCALENE.vertices, (F(2), F(-1, 2), F(3)))))
        l = desargues_axis(SCALENE, image)
        for s1, s2 in zip(SCALENE.sides(), image.sides()):
            assert l.contains(intersect_lines(s1, s2))

    def test_dilated_copy_has_axis_at_infinity(self):
        image = Triangle(*(v * 2 for v in SCALENE.vertices))
        with pytest.raises(ParallelSides):
            desargues_axis(SCALENE, image)

    def test_hagge_axis_perpendicular_to_orthologic_line(self, hagge_t1):
        axis = desargues_axis(T1, hagge_t1.hagge_triangle())
        assert perpendicular(axis, line_through(P(0, 0), T1_CENTER))


class TestOrthologic:
    def test_hagge_pair(self, hagge_t1):
        # the center of ABC is the second meeting point of the rectangular
        # hyperbola ABCHP with the circumcircle, not the point A P meets it
        first, second = orthologic_centers(T1, hagge_t1.hagge_triangle())
        assert (first, second) == (T1_CENTER, P(0, 0))
        assert circumcircle(T1).contains(first)

    def test_mirror_copy(self):
        mirror = Triangle(*(P(-v.x, v.y) for v in SCALENE.vertices))
        first, second = orthologic_centers(SCALENE, mirror)
        assert P(-first.x, first.y) == second

    def test_directly_similar(self):
        rotated = Triangle(*(P(-v.y, v.x) for v in SCALENE.vertices))
        with pytest.raises(NotIndirectlySimilar):
            orthologic_centers(SCALENE, rotated)

    def test_paralogic(self, hagge_t1):
        S = paralogic_center(T1, hagge_t1.hagge_triangle())
        assert S == P(F(448, 193), F(-189, 193))
        assert circumcircle(T1).contains(S)

    def test_paralogic_mirror(self):
        mirror = Triangle(*(P(-v.x, v.y) for v in SCALENE.vertices))
        S = paralogic_center(SCALENE, mirror)
        assert circumcircle(SCALENE).contains(S)

    def test_rotated_copy_not_paralogic(self):
        # a quarter turn would make the parallels the altitudes, which do concur
        rot = P(F(3, 5), F(4, 5))
        rotated = Triangle(*(cmul(rot, v) + P(3, 1) for v in SCALENE.vertices))
        with pytest.raises(NotParalogic):
            paralogic_center(SCALENE, rotated)


class TestHyperbolas:
    def test_fixture_double_point(self, hagge_t1):
        d = double_point_from_hyperbolas(T1, hagge_t1.hagge_triangle(), P(0, 0))
        assert abs(d.x - 4 / 3) < 1e-9 and abs(d.y - 1) < 1e-9

    def test_family_instance_shares_a_line(self, family):
        # both hyperbolas contain the line x + y = 0 through H and Q, so
        # the second common point is not isolated
        assert family.hyp.coefficients == (1, 0, -1, 6, 6, 0)
        assert family.hyp2.coefficients == (1, 0, -1, -12, -12, 0)
        with pytest.raises(DegenerateConfiguration):
            double_point_from_hyperbolas(family.tri, family.image, family.Q)

    def test_general_pair(self):
        image = perspective_image(SCALENE, P(-3, 2), F(1, 2))
        cfg = build_speckman(SCALENE, image)
        d = double_point_from_hyperbolas(SCALENE, image, cfg.Q)
        assert abs(d.x - float(cfg.P.x)) < 1e-9 and abs(d.y - float(cfg.P.y)) < 1e-9

    def test_directly_similar_rejected(self):
        rotated = Triangle(*(P(-v.y, v.x) for v in SCALENE.vertices))
        with pytest.raises(NotIndirectlySimilar):
            double_point_from_hyperbolas(SCALENE, rotated, P(0, 0))

    def test_literal_second_chord_point_is_off_the_hyperbola(self):
        # counterexample: the second point of line AP on the circumcircle is not on ABCHP
        tri, p = SCALENE, P(2, 1)
        K = conic_through_five(*tri.vertices, orthocenter(tri), p)
        D = second_intersection(circumcircle(tri), line_through(tri.A, p), tri.A)
        assert not conic_contains(K, D)

    @settings(max_examples=25)
    @given(triangle_and_point())
    def test_orthologic_center_on_abchp(self, tp):
        tri, p = tp
        H = orthocenter(tri)
        assume(p != H)
        cfg = build_hagge(tri, p)
        first, _ = orthologic_centers(tri, cfg.hagge_triangle())
        K = conic_through_five(*tri.vertices, H, p)
        assert conic_contains(K, first)
        assert circumcircle(tri).contains(first)


class TestSimilarFromCircle:
    def test_circumcircle_congruent_copy(self):
        T = reflect_in_line(orthocenter(SCALENE), SCALENE.sides()[0])
        image = similar_from_circle(SCALENE, circumcircle(SCALENE), T)
        assert is_indirectly_similar(SCALENE, image)
        assert dist_sq(image.A, image.B) == dist_sq(SCALENE.A, SCALENE.B)

    def test_unit_circle(self):
        unit = Circle(0, 0, -1)
        image = similar_from_circle(T1, unit, P(1, 0))
        assert all(unit.contains(v) for v in image.vertices)
        assert verify_orthologic(T1, image, P(1, 0)).passed

    def test_off_circle(self):
        with pytest.raises(PointNotOnCircle):
            similar_from_circle(T1, Circle(0, 0, -1), P(2, 0))

    @settings(max_examples=30)
    @given(triangles(), points, points)
    def test_orthologic_property(self, tri, center, T):
        assume(center != T)
        c = Circle.from_center(center, dist_sq(center, T))
        image = similar_from_circle(tri, c, T)
        assume(T not in image.vertices)
        assert verify_orthologic(tri, image, T).passed


def test_orthocenter_pair_collinear_with_perspector():
    image = perspective_image(SCALENE, P(-3, 2), F(1, 2))
    cfg = build_speckman(SCALENE, image)
    assert collinear(cfg.H, cfg.h, cfg.Q)
