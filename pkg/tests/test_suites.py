import json

import pytest

from latticemed.suites import (
    EXPECTED_CONFIRMED,
    SuiteConfig,
    case_seed,
    run_suite,
    suite_names,
    thread_count,
)

SMALL = SuiteConfig(
    max_poset=3,
    trials=100,
    random_tensors=20,
    identity_samples=500,
    funcal_samples=100,
    boxtimes_samples=20,
    root_power_samples=100,
    maps_per_lattice=6,
)

ALL = [
    "laws", "prop-mk", "symbolic-mk", "toi-implies-sym", "counterexample-sym-not-toi", "genorthosym",
    "genorthsteady", "funcal", "sum", "product", "boxtimes", "ortho-equivalence", "troitsky",
    "steady-equivalence", "root-power", "final-corollary",
]


def test_suite_names():
    assert suite_names() == ALL


@pytest.mark.parametrize("name", ALL)
def test_suite_passes_small_config(name):
    report = run_suite(name, SMALL)
    assert report.passed, [c for c in report.cases if not c.passed][:3]
    assert report.checks > 0


def test_unknown_suite_lists_names():
    with pytest.raises(ValueError, match="prop-mk"):
        run_suite("nope")


def test_counterexample_report_entries():
    report = run_suite("counterexample-sym-not-toi", SMALL)
    data = report.to_json()
    first = data["cases"][0]
    assert first["verdict"] == EXPECTED_CONFIRMED
    assert first["lhs"] == "2" and first["rhs"] == "3/2"
    assert data["summary"] == {"pass": len(report.cases), "fail": 0}


def test_report_schema_and_determinism(monkeypatch):
    monkeypatch.setenv("LATTICEMED_THREADS", "1")
    a = json.dumps(run_suite("ortho-equivalence", SMALL).to_json(), sort_keys=True)
    monkeypatch.setenv("LATTICEMED_THREADS", "4")
    b = json.dumps(run_suite("ortho-equivalence", SMALL).to_json(), sort_keys=True)
    assert a == b
    data = json.loads(a)
    assert set(data) == {"suite", "config", "cases", "summary"}
    assert data["config"]["seed"] == 0


def test_seed_changes_population():
    a = run_suite("sum", SuiteConfig(seed=1, identity_samples=100))
    b = run_suite("sum", SuiteConfig(seed=2, identity_samples=100))
    assert a.passed and b.passed
    assert case_seed(1, 0) != case_seed(2, 0)


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv("LATTICEMED_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("LATTICEMED_THREADS", "0")
    assert thread_count() >= 1
    monkeypatch.setenv("LATTICEMED_THREADS", "x")
    with pytest.raises(ValueError):
        thread_count()
