from fractions import Fraction

import pytest
from hypothesis import assume, settings
from hypothesis import strategies as st

from haggelab.centers import circumcircle, orthocenter
from haggelab.geom import Point, Triangle, orient, same_point


def P(x, y) -> Point:
    return Point(Fraction(x), Fraction(y))


T1 = Triangle(P(0, 0), P(4, 0), P(0, 3))
# orthocenter-centered family at v=1, w=2
S8 = Triangle(P(-6, 0), P(-4, 2), P(-4, 4))


@pytest.fixture
def t1() -> Triangle:
    return T1


@pytest.fixture
def s8() -> Triangle:
    return S8


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=50)
points = st.builds(Point, rationals, rationals)


@st.composite
def triangles(draw, allow_right: bool = False) -> Triangle:
    A, B, C = draw(points), draw(points), draw(points)
    area = orient(A, B, C)
    assume(abs(area) > Fraction(1, 50))
    tri = Triangle(A, B, C)
    if not allow_right:
        H = orthocenter(tri)
        assume(not any(same_point(H, v) for v in tri.vertices))
    return tri


@st.composite
def triangle_and_point(draw):
    """A triangle and a rational point off its sidelines and circumcircle."""
    tri = draw(triangles())
    p = draw(points)
    assume(not any(side.contains(p) for side in tri.sides()))
    assume(not circumcircle(tri).contains(p))
    return tri, p


# exact arithmetic on large fractions has uneven timing; keep runs reproducible
settings.register_profile("lab", deadline=None, derandomize=True)
settings.load_profile("lab")


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import VERDICTS

    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(VERDICTS):
        terminalreporter.write_line(VERDICTS[n])
