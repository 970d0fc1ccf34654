from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from haggelab.centers import circumcircle, orthocenter
from haggelab.errors import (
    CoincidentPoints,
    CollinearPoints,
    ConcentricCircles,
    DegenerateConfiguration,
    DuplicatePoints,
    ParabolicConic,
    ParallelLines,
    PointNotOnCircle,
    PointNotOnCircumcircle,
    PointNotOnLine,
)
from haggelab.geom import (
    Circle,
    Conic,
    Line,
    Point,
    Triangle,
    circle_through,
    collinear,
    concurrent,
    concyclic,
    conic_center,
    conic_contains,
    conic_through_five,
    dilate,
    divide,
    dot,
    foot,
    from_json,
    half_turn,
    intersect_lines,
    is_rectangular,
    line_through,
    midpoint,
    parallel,
    perpendicular,
    quadratic_parts_proportional,
    radical_axis,
    radical_center,
    reflect_in_line,
    second_intersection,
    simson_line,
    to_json,
)

from .conftest import T1, P, points, triangle_and_point, triangles

UNIT = Circle(0, 0, -1)


class TestLines:
    def test_through_two_points(self):
        assert line_through(P(0, 0), P(1, 1)) == Line(1, -1, 0)
        assert line_through(P(-4, 2), P(-4, 4)) == Line(1, 0, 4)

    def test_coincident_points(self):
        with pytest.raises(CoincidentPoints):
            line_through(P(2, 3), P(2, 3))

    def test_canonical_form(self):
        assert Line(F(-2, 3), F(4, 3), F(2)).coefficients == (1, -2, -3)
        assert Line(-2, 0, 6) == Line(1, 0, -3)

    def test_intersections(self):
        assert intersect_lines(Line(1, 0, 0), Line(0, 1, 0)) == P(0, 0)
        # y = -2x - 12 and y = -x
        assert intersect_lines(Line(2, 1, 12), Line(1, 1, 0)) == P(-12, 12)

    def test_parallel_lines(self):
        with pytest.raises(ParallelLines):
            intersect_lines(Line(1, 0, -1), Line(1, 0, -2))


class TestReflection:
    def test_reflect(self):
        assert reflect_in_line(P(4, 3), Line(3, 4, -12)) == P(F(28, 25), F(-21, 25))
        assert reflect_in_line(P(-16, 0), Line(1, -1, 0)) == P(0, -16)

    def test_point_on_line_is_fixed(self):
        l = Line(3, 4, -12)
        assert reflect_in_line(P(4, 0), l) == P(4, 0)

    @given(points, points, points)
    def test_involution(self, p, a, b):
        if a == b:
            return
        l = line_through(a, b)
        assert reflect_in_line(reflect_in_line(p, l), l) == p
        assert midpoint(p, reflect_in_line(p, l)) == foot(p, l)


class TestSecondIntersection:
    def test_fixture_point(self):
        c = Circle(-2, F(-3, 2), 0)
        assert second_intersection(c, Line(3, -4, 0), P(0, 0)) == P(4, 3)

    def test_family_point(self, s8):
        gamma = circumcircle(s8)
        assert second_intersection(gamma, Line(0, 1, 0), P(-6, 0)) == P(-8, 0)

    def test_tangent_returns_known(self):
        assert second_intersection(UNIT, Line(1, 0, -1), P(1, 0)) == P(1, 0)

    def test_preconditions(self):
        with pytest.raises(PointNotOnCircle):
            second_intersection(UNIT, Line(0, 1, 0), P(2, 0))
        with pytest.raises(PointNotOnLine):
            second_intersection(UNIT, Line(0, 1, -1), P(1, 0))

    @given(triangles(), st.fractions(min_value=-20, max_value=20, max_denominator=20))
    def test_swap_is_involution(self, tri, slope):
        c = circumcircle(tri)
        l = Line(slope, -1, tri.A.y - slope * tri.A.x)
        q = second_intersection(c, l, tri.A)
        assert c.contains(q) and l.contains(q)
        assert second_intersection(c, l, q) == tri.A


class TestCircles:
    def test_hagge_circle_of_fixture(self):
        c = circle_through(P(F(28, 25), F(-21, 25)), P(F(36, 73), F(123, 73)), P(F(34, 13), F(12, 13)))
        assert c == Circle(F(-32, 25), F(-27, 50), 0)
        assert c.contains(P(0, 0))

    def test_family_circle(self):
        assert circle_through(P(0, -12), P(4, -8), P(8, -8)) == Circle(-6, 14, 192)

    def test_errors(self):
        with pytest.raises(CollinearPoints):
            circle_through(P(0, 0), P(1, 1), P(2, 2))
        with pytest.raises(DuplicatePoints):
            circle_through(P(0, 0), P(0, 0), P(2, 2))

    @given(triangles(allow_right=True))
    def test_through_three_exact(self, tri):
        c = circle_through(*tri.vertices)
        assert all(c.power(v) == 0 for v in tri.vertices)


class TestConics:
    def test_five_points_on_circle(self):
        pts = [P(1, 0), P(0, 1), P(-1, 0), P(0, -1), P(F(3, 5), F(4, 5))]
        assert conic_through_five(*pts) == Conic(1, 0, 1, 0, 0, -1)

    def test_four_collinear(self):
        pts = [P(0, 0), P(1, 0), P(2, 0), P(3, 0), P(0, 1)]
        with pytest.raises(DegenerateConfiguration):
            conic_through_five(*pts)

    def test_contains(self):
        K = UNIT.as_conic()
        assert conic_contains(K, P(1, 0))
        assert not conic_contains(K, P(2, 0))

    def test_fixture_hyperbola(self):
        # the right angle puts H on A, so the centroid pins a unique rectangular hyperbola
        from haggelab.geom import conic_through

        K = conic_through([*T1.vertices, P(F(4, 3), 1)], rectangular=True)
        assert K == Conic(6, 7, -6, -24, 18, 0)
        assert conic_contains(K, P(F(324, 193), F(768, 193)))
        assert not conic_contains(K, P(4, 3))
        assert K.value(P(4, 3)) == 84

    def test_center(self):
        assert conic_center(Circle(-6, 14, 192).as_conic()) == P(6, -14)
        assert conic_center(Conic(1, 0, -1, 0, 0, -1)) == P(0, 0)
        with pytest.raises(ParabolicConic):
            conic_center(Conic(1, 0, 0, 0, -1, 0))

    def test_rectangular(self):
        assert is_rectangular(Conic(1, 0, -1, 0, 0, -1))
        assert not is_rectangular(UNIT.as_conic())

    def test_parallel_asymptotes(self):
        assert quadratic_parts_proportional(Conic(1, 0, -1, 0, 0, -1), Conic(2, 0, -2, 1, 0, -5))
        assert not quadratic_parts_proportional(Conic(1, 0, -1, 0, 0, -1), Conic(0, 1, 0, 0, 0, -1))

    @settings(max_examples=60, deadline=None)
    @given(triangle_and_point())
    def test_abchp_is_rectangular(self, tp):
        tri, p = tp
        H = orthocenter(tri)
        if p == H:
            return
        K = conic_through_five(*tri.vertices, H, p)
        assert is_rectangular(K)
        assert all(conic_contains(K, q) for q in (*tri.vertices, H, p))


class TestPredicates:
    def test_fixture_collinear(self):
        assert collinear(P(F(28, 25), F(-21, 25)), P(F(4, 3), 1), P(F(36, 25), F(48, 25)))

    def test_square_concyclic(self):
        assert concyclic(P(0, 0), P(1, 0), P(0, 1), P(1, 1))
        assert not concyclic(P(0, 0), P(1, 0), P(0, 1), P(2, 2))

    def test_concurrent(self):
        assert not concurrent(Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, -1))
        assert concurrent(Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, 0))

    def test_parallel_perpendicular(self):
        assert parallel(Line(1, 2, 3), Line(2, 4, -1))
        assert perpendicular(Line(1, 2, 3), Line(2, -1, 0))


class TestAffine:
    def test_fixture_values(self):
        assert midpoint(P(0, 0), P(F(28, 25), F(-21, 25))) == P(F(14, 25), F(-21, 50))
        assert dilate(P(-8, 0), P(0, 0), 2) == P(-16, 0)
        assert half_turn(P(F(18, 25), F(24, 25)), P(1, F(3, 4))) == P(F(32, 25), F(27, 50))

    def test_divide(self):
        assert divide(P(0, 0), P(4, 2), F(1, 2)) == P(2, 1)
        assert divide(P(0, 0), P(4, 2), 0) == P(0, 0)

    @given(points, points, st.fractions(max_denominator=30))
    def test_identities(self, p, c, k):
        assert dilate(p, c, 1) == p
        assert half_turn(half_turn(p, c), c) == p
        assert divide(p, c, F(1, 2)) == midpoint(p, c)


class TestRadical:
    def test_axis(self):
        assert radical_axis(UNIT, Circle(-1, 0, 0)) == Line(2, 0, -1)

    def test_fixture_axis_perpendicular_to_centers(self):
        gamma, sigma = circumcircle(T1), Circle(F(-32, 25), F(-27, 50), 0)
        ax = radical_axis(gamma, sigma)
        assert ax == Line(3, 4, 0)
        assert perpendicular(ax, line_through(gamma.center, sigma.center))

    def test_concentric(self):
        with pytest.raises(ConcentricCircles):
            radical_axis(UNIT, Circle(0, 0, -4))

    def test_center(self):
        c = radical_center(UNIT, Circle(-1, 0, 0), Circle(0, -1, 0))
        assert c == P(F(1, 2), F(1, 2))

    @given(points, points, st.fractions(1, 50), st.fractions(1, 50))
    def test_perpendicular_to_line_of_centers(self, c1, c2, r1, r2):
        if c1 == c2:
            return
        ax = radical_axis(Circle.from_center(c1, r1), Circle.from_center(c2, r2))
        assert dot(ax.direction, c2 - c1) == 0


class TestSimson:
    def test_vertex_is_degenerate_not_error(self):
        l = simson_line(T1, T1.B)
        assert l.contains(T1.B)

    def test_fixture(self):
        l = simson_line(T1, P(4, 3))
        assert l == Line(3, 4, -12)

    def test_off_circle(self):
        with pytest.raises(PointNotOnCircumcircle):
            simson_line(T1, P(1, 1))


@given(triangles(allow_right=True))
def test_json_round_trip(tri):
    for obj in (tri, circumcircle(tri), tri.sides()[0], tri.A):
        assert from_json(to_json(obj)) == obj
