import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from haggelab.errors import ArgumentTypeError, EmptyDrawList
from haggelab.geom import Circle, Conic, Line, Point
from haggelab.script import parse_script, run_program
from haggelab.svg import SEGMENTS, Options, emit_svg

ROOT = Path(__file__).resolve().parents[1]
NS = {"s": "http://www.w3.org/2000/svg"}


def _demo_svg(width: int = 800) -> str:
    prog = parse_script((ROOT / "demos" / "t1_hagge.geo").read_text())
    return emit_svg(run_program(prog).env, prog.draws(), Options(width=width))


def test_matches_golden_file():
    assert _demo_svg() == (ROOT / "tests" / "data" / "t1_hagge.svg").read_text()


def test_demo_contents():
    root = ET.fromstring(_demo_svg())
    circles = root.findall(".//s:circle[@class='circle']", NS)
    assert sorted(c.get("data-name") for c in circles) == ["Gamma", "Sigma"]
    labels = [t.text for t in root.findall("s:text", NS)]
    assert labels == ["U", "V", "W", "X", "Y", "Z", "H", "P"]
    assert root.get("width") == "800"


def test_viewbox_has_margin():
    env = {"A": Point(0, 0), "B": Point(10, 10)}
    root = ET.fromstring(emit_svg(env, [("A", ()), ("B", ())]))
    x, y, w, h = (float(v) for v in root.get("viewBox").split())
    assert (x, w) == (-0.5, 11.0)
    # world y points up, so the box is flipped
    assert (y, h) == (-10.5, 11.0)


def test_deterministic():
    assert _demo_svg(640) == _demo_svg(640)


def test_empty_draw_list():
    with pytest.raises(EmptyDrawList):
        emit_svg({"A": Point(0, 0)}, [])


def test_undrawable_value():
    with pytest.raises(ArgumentTypeError):
        emit_svg({"k": 3}, [("k", ())])
    with pytest.raises(ArgumentTypeError):
        emit_svg({}, [("missing", ())])


@pytest.mark.parametrize(
    "conic, branches",
    [
        (Conic(1, 0, -1, 0, 0, -1), 2),  # hyperbola
        (Conic(1, 0, 4, 0, 0, -4), 1),  # ellipse
        (Conic(1, 0, 0, 0, -1, 0), 1),  # parabola
    ],
)
def test_conic_sampling(conic, branches):
    env = {"K": conic, "c": Circle(0, 0, -4)}
    root = ET.fromstring(emit_svg(env, [("K", ()), ("c", ())]))
    lines = root.findall(".//s:polyline[@class='conic']", NS)
    assert len(lines) == branches
    for pl in lines:
        assert len(pl.get("points").split()) == SEGMENTS + 1


def test_line_pair_drawn_as_lines():
    env = {"K": Conic(1, 0, -1, 0, 0, 0), "c": Circle(0, 0, -4)}
    root = ET.fromstring(emit_svg(env, [("K", ()), ("c", ())]))
    lines = root.findall(".//s:polyline[@class='conic']", NS)
    assert len(lines) == 2 and all(len(pl.get("points").split()) == 2 for pl in lines)


def test_style_and_label():
    env = {"A": Point(0, 0), "l": Line(1, -1, 0), "c": Circle(0, 0, -1)}
    draws = [("A", (("label", "none"),)), ("l", (("color", "blue"), ("dash", "yes"))), ("c", ())]
    root = ET.fromstring(emit_svg(env, draws))
    assert root.findall("s:text", NS) == []
    line = root.find(".//s:polyline[@class='line']", NS)
    assert line.get("stroke") == "blue" and line.get("stroke-dasharray")
