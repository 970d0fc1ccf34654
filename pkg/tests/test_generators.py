import pytest

from haggelab.centers import centroid, circumcircle, isogonal_conjugate, orthocenter
from haggelab.generators import BOUND, FAMILIES, MIN_AREA, random_instance
from haggelab.hagge import build_hagge


def test_seed_42_is_deterministic():
    a = random_instance(42, "hagge")
    b = random_instance(42, "hagge")
    assert a.to_json() == b.to_json()
    assert build_hagge(a.tri, a.params["P"]).sigma.contains(orthocenter(a.tri))


def test_families_differ_by_seed():
    assert random_instance(1, "hagge").to_json() != random_instance(2, "hagge").to_json()


@pytest.mark.parametrize("family", FAMILIES)
def test_every_family_draws(family):
    inst = random_instance(3, family)
    assert inst.family == family
    for v in inst.tri.vertices:
        for c in (v.x, v.y):
            assert abs(c.numerator) <= BOUND and c.denominator <= BOUND


def test_unknown_family():
    with pytest.raises(ValueError):
        random_instance(0, "nope")


def test_thousand_hagge_draws_are_valid():
    for seed in range(1000):
        inst = random_instance(seed, "hagge")
        tri, P = inst.tri, inst.params["P"]
        assert abs(tri.signed_area()) >= MIN_AREA
        assert not any(side.contains(P) for side in tri.sides())
        assert not circumcircle(tri).contains(P)
        assert P != orthocenter(tri)
        assert isogonal_conjugate(tri, P) != centroid(tri)


def test_speckman_ratios_exclude_unit():
    for seed in range(200):
        k = random_instance(seed, "speckman_h").params["k"]
        assert k not in (0, 1, -1)


def test_circle_points_are_exact():
    for seed in range(50):
        inst = random_instance(seed, "simson")
        assert circumcircle(inst.tri).contains(inst.params["P"])
