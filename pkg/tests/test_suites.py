import json

import pytest

from haggelab.report import dumps
from haggelab.suites import PRIMARY, SUITES, instance_seed, run_one, run_suite


def test_primary_suites_registered():
    assert set(PRIMARY) <= set(SUITES)


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_every_suite_runs(suite):
    rep = run_one(suite, 11, 0)
    assert rep.passed, (suite, rep.error, [c.name for c in rep.failures()])
    assert rep.suite == suite


def test_parallel_matches_serial():
    serial = run_suite("speckman", 6, 3)
    parallel = run_suite("speckman", 6, 3, jobs=3)
    assert dumps(serial.to_json()) == dumps(parallel.to_json())


def test_report_shape():
    data = json.loads(dumps(run_suite("hagge", 3, 5).to_json()))
    assert data["summary"] == {"instances": 3, "failed": 0, "pass": True}
    assert [r["index"] for r in data["instances"]] == [0, 1, 2]
    assert data["counterexamples"] == []
    assert data["instances"][0]["instance"]["seed"] == instance_seed(5, 0)


def test_canonical_json_sorted():
    text = dumps({"b": 1, "a": {"d": 2, "c": 3}})
    assert text.index('"a"') < text.index('"b"') and text.index('"c"') < text.index('"d"')


def test_section8_is_always_rational():
    assert run_suite("section8", 2, 0, backend="float").backend == "rational"


def test_float_backend_runs():
    rep = run_suite("hagge", 5, 1, backend="float")
    assert rep.backend == "float"
    assert rep.passed
