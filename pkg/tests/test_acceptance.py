"""Acceptance criteria at their stated tolerances and sample sizes.

Each test prints one PASS/FAIL line. Run alone with
``pytest tests/test_acceptance.py -v -s`` or ``python tests/test_acceptance.py``.
"""

import random
import time
from fractions import Fraction

import pytest

from latticemed.coords import CoordTuple
from latticemed.multilinear import binomial_cross_terms, symmetrize
from latticemed.suites import EXPECTED_CONFIRMED, SuiteConfig, random_tensor, run_suite

CFG = SuiteConfig()
ELAPSED: dict[int, float] = {}


def report_line(capsys, number, ok, detail, seconds):
    ELAPSED[number] = seconds
    with capsys.disabled():
        print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({seconds:.1f}s) {detail}")


def run(*names):
    start = time.perf_counter()
    reports = {name: run_suite(name, CFG) for name in names}
    return reports, time.perf_counter() - start


def summary(reports):
    return "; ".join(f"{name} {r.summary()}" for name, r in reports.items())


def case(report, cid):
    return next(c for c in report.cases if c.id == cid)


def test_criterion_1_mk_properties(capsys):
    reports, secs = run("prop-mk")
    ok = all(r.passed for r in reports.values()) and secs < 60
    report_line(capsys, 1, ok, summary(reports), secs)
    assert ok


def test_criterion_2_symbolic_suite(capsys):
    reports, secs = run("symbolic-mk")
    rep = reports["symbolic-mk"]
    counts = {v: case(rep, f"free-dl-v={v}").lhs for v in (1, 2, 3, 4)}
    ok = rep.passed and counts[3] == 18 and counts == {1: 1, 2: 4, 3: 18, 4: 166} and secs < 10
    report_line(capsys, 2, ok, f"{rep.summary()}; free DL counts {counts}", secs)
    assert ok


def test_criterion_3_counterexample(capsys):
    reports, secs = run("counterexample-sym-not-toi")
    rep = reports["counterexample-sym-not-toi"]
    grids = [c for c in rep.cases if c.id.startswith("grid-")]
    exact = all(
        c.verdict == EXPECTED_CONFIRMED
        and isinstance(c.lhs, Fraction) and c.lhs == 2
        and isinstance(c.rhs, Fraction) and c.rhs == Fraction(3, 2)
        for c in grids
    )
    ok = rep.passed and len(grids) > 0 and exact
    report_line(capsys, 3, ok, f"T(f,g) = 2, T(f meet g, f join g) = 3/2 on {len(grids)} grids", secs)
    assert ok


def test_criterion_4_sum_product(capsys):
    reports, secs = run("sum", "product")
    samples = {name: sum(c.checks for c in r.cases) for name, r in reports.items()}
    ok = all(r.passed for r in reports.values()) and all(n >= 10_000 for n in samples.values())
    report_line(capsys, 4, ok, f"exact samples {samples}", secs)
    assert ok


def test_criterion_5_functional_calculus(capsys):
    reports, secs = run("funcal")
    rep = reports["funcal"]
    builtins = [c for c in rep.cases if c.id.endswith("-toi") and "not-toi" not in c.id]
    pi1 = case(rep, "pi1-not-toi")
    ok = (
        rep.passed
        and all(c.checks >= 2 * CFG.funcal_samples for c in builtins)
        and pi1.verdict == EXPECTED_CONFIRMED
        and pi1.checks <= 100
    )
    report_line(capsys, 5, ok, f"{len(builtins)} builtin cases; x1 counterexample at trial {pi1.checks}", secs)
    assert ok


def test_criterion_6_boxtimes(capsys):
    reports, secs = run("boxtimes")
    rep = reports["boxtimes"]
    ok = rep.passed and CFG.grid_tol <= 1e-6 and rep.checks >= 2 * CFG.boxtimes_samples
    report_line(capsys, 6, ok, rep.summary(), secs)
    assert ok


def test_criterion_7_orthosymmetry(capsys):
    reports, secs = run("ortho-equivalence", "troitsky")
    ok = all(r.passed for r in reports.values()) and CFG.random_tensors >= 200
    report_line(capsys, 7, ok, summary(reports), secs)
    assert ok


def test_criterion_8_steadiness(capsys):
    start = time.perf_counter()
    reports, _ = run("steady-equivalence")
    rep = reports["steady-equivalence"]
    # an extra exact spot check of the cross-term identity on signed rationals
    rng = random.Random(8)
    identity = True
    for _ in range(50):
        n, m = rng.choice((2, 3)), rng.choice((2, 3))
        T = symmetrize(random_tensor(rng, n, m, "dense"))
        f, g = (CoordTuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(m)) for _ in range(2))
        lhs, rhs = binomial_cross_terms(T, f, g)
        identity &= lhs == rhs
    orders = {c.id.split("/")[0] for c in rep.cases if c.id.startswith("r=")}
    ok = rep.passed and identity and orders == {"r=2", "r=3"}
    report_line(capsys, 8, ok, f"{rep.summary()}; binomial spot check {'exact' if identity else 'MISMATCH'}", time.perf_counter() - start)
    assert ok


def test_criterion_9_root_power(capsys):
    reports, secs = run("root-power")
    rep = reports["root-power"]
    ok = rep.passed and CFG.tol <= 1e-9 and case(rep, "identity").checks >= CFG.root_power_samples
    report_line(capsys, 9, ok, rep.summary(), secs)
    assert ok


def test_criterion_10_finite_lattice_verifiers(capsys):
    reports, secs = run("genorthosym", "genorthsteady")
    ok = all(r.passed for r in reports.values()) and CFG.maps_per_lattice >= 50
    report_line(capsys, 10, ok, summary(reports), secs)
    assert ok


def test_total_wall_clock(capsys):
    total = sum(ELAPSED.values())
    ok = len(ELAPSED) == 10 and total < 300
    with capsys.disabled():
        print(f"\nacceptance total: {'PASS' if ok else 'FAIL'} {len(ELAPSED)} criteria in {total:.1f}s")
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v", "-s"]))
