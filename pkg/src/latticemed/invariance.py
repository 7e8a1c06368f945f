"""Checkers for total-orderization invariance (TOI) and symmetry of maps.

A :class:`MapUnderTest` bundles an evaluator with the carrier it is defined
on. Exhaustive strategies enumerate every argument tuple of a finite
carrier (within a budget); sampled strategies draw from ``domain.sample``
with a fixed seed. Failures come back as :class:`Certificate` objects that
can be replayed.
"""

from __future__ import annotations

import itertools
import math
import operator
import random
from dataclasses import dataclass, field
from numbers import Real
from typing import Any, Callable, Iterable, Sequence

from latticemed.lattice import (
    EXHAUSTIVE,
    DistributiveLattice,
    Exhaustive,
    FiniteLattice,
    PointwiseLattice,
    Sampled,
    UnsupportedError,
)
from latticemed.orderization import (
    orderize_finite,
    require_distributive,
    total_orderization,
    total_orderization_pointwise,
)

EXHAUSTIVE_BUDGET = 10**6


@dataclass
class MapUnderTest:
    arity: int
    domain: DistributiveLattice
    evaluate: Callable[[tuple], Any]
    equal: Callable[[Any, Any], bool] = operator.eq
    name: str = "T"

    def __call__(self, xs: Sequence):
        return self.evaluate(tuple(xs))


@dataclass
class Certificate:
    verdict: str
    witness: tuple | None = None
    compared: tuple | None = None
    lhs: Any = None
    rhs: Any = None
    trials: int = 0
    seed: int | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def replay(self, evaluate: Callable[[tuple], Any], equal: Callable = operator.eq) -> bool:
        """Re-evaluate the witness; True iff the recorded failure reproduces.

        When ``compared`` is set the failure is ``evaluate(witness) !=
        evaluate(compared)``, otherwise ``evaluate(witness) != rhs``.
        """
        if self.passed or self.witness is None:
            return False
        lhs = evaluate(self.witness)
        rhs = evaluate(self.compared) if self.compared is not None else self.rhs
        return not equal(lhs, rhs)


def orderize(L: DistributiveLattice, xs: Sequence) -> tuple:
    if isinstance(L, FiniteLattice):
        return orderize_finite(L, xs)
    if isinstance(L, PointwiseLattice):
        return total_orderization_pointwise(xs)
    return total_orderization(L, xs, check_dual=False).values


def _tuples(T: MapUnderTest, strategy, budget: int) -> tuple[Iterable[tuple], int | None]:
    L = T.domain
    if isinstance(strategy, Exhaustive):
        if not L.is_finite:
            raise UnsupportedError(f"exhaustive check needs a finite carrier, got {L!r}")
        if L.size**T.arity > budget:
            raise UnsupportedError(f"{L.size}^{T.arity} tuples exceed the budget of {budget}")
        return itertools.product(L.elements, repeat=T.arity), None
    rng = random.Random(strategy.seed)
    return (tuple(L.sample(rng) for _ in range(T.arity)) for _ in range(strategy.trials)), strategy.seed


def is_toi(T: MapUnderTest, strategy: Exhaustive | Sampled = EXHAUSTIVE, budget: int = EXHAUSTIVE_BUDGET) -> Certificate:
    """Check ``T(xs) == T(to(xs))`` on every tuple the strategy produces."""
    require_distributive(T.domain)
    tuples, seed = _tuples(T, strategy, budget)
    count = 0
    for xs in tuples:
        count += 1
        ys = orderize(T.domain, xs)
        lhs, rhs = T(xs), T(ys)
        if not T.equal(lhs, rhs):
            return Certificate("fail", xs, ys, lhs, rhs, count, seed)
    return Certificate("pass", trials=count, seed=seed)


def _permutations(n: int) -> list[tuple[int, ...]]:
    if n <= 4:
        return [p for p in itertools.permutations(range(n)) if p != tuple(range(n))]
    out = []
    for i, j in itertools.combinations(range(n), 2):
        p = list(range(n))
        p[i], p[j] = j, i
        out.append(tuple(p))
    return out


def is_symmetric_map(
    T: MapUnderTest, strategy: Exhaustive | Sampled = EXHAUSTIVE, budget: int = EXHAUSTIVE_BUDGET
) -> Certificate:
    """Compare ``T(xs)`` with ``T(xs permuted)``: all permutations for n <= 4, transpositions beyond."""
    perms = _permutations(T.arity)
    tuples, seed = _tuples(T, strategy, budget)
    count = 0
    for xs in tuples:
        count += 1
        lhs = T(xs)
        for p in perms:
            ys = tuple(xs[i] for i in p)
            rhs = T(ys)
            if not T.equal(lhs, rhs):
                return Certificate("fail", xs, ys, lhs, rhs, count, seed, {"permutation": p})
    return Certificate("pass", trials=count, seed=seed)


def make_toi_map(
    g: Callable[[tuple], Any],
    n: int,
    domain: DistributiveLattice,
    equal: Callable = operator.eq,
    name: str = "g.to",
) -> MapUnderTest:
    """The map ``xs -> g(to(xs))``; TOI because ``to`` fixes its own output."""
    return MapUnderTest(n, domain, lambda xs: g(orderize(domain, xs)), equal, name)


@dataclass
class EquivalenceReport:
    """Outcome of checking the (i) <=> (ii) equivalence for one TOI map."""

    status: str  # "ok" | "counterexample" | "precondition-failed"
    holds_i: bool | None = None
    holds_ii: bool | None = None
    witness_i: tuple | None = None
    witness_ii: tuple | None = None
    checked: int = 0
    toi: Certificate | None = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def _finish(report: EquivalenceReport) -> EquivalenceReport:
    report.status = "ok" if report.holds_i == report.holds_ii else "counterexample"
    return report


def _require_bottom(L: DistributiveLattice):
    if L.bottom is None:
        raise ValueError(f"{L!r} has no bottom element")
    return L.bottom


def _condition_tuples(T: MapUnderTest, strategy, pairwise: bool):
    """Tuples satisfying the disjointness hypothesis of condition (i).

    ``pairwise=False``: some pair (possibly a repeated index) meets to the
    bottom. ``pairwise=True``: every pair of distinct slots does.
    """
    L, n = T.domain, T.arity
    theta = L.bottom
    if isinstance(strategy, Exhaustive):
        for xs in itertools.product(L.elements, repeat=n):
            if pairwise:
                ok = all(L.meet(xs[i], xs[j]) == theta for i, j in itertools.combinations(range(n), 2))
            else:
                ok = any(L.meet(xs[i], xs[j]) == theta for i, j in itertools.combinations_with_replacement(range(n), 2))
            if ok:
                yield xs
    else:
        rng = random.Random(strategy.seed)
        for _ in range(strategy.trials):
            yield L.sample_disjoint(rng, n, pairwise)


def _tail_tuples(T: MapUnderTest, strategy, count: int):
    L = T.domain
    if isinstance(strategy, Exhaustive):
        yield from itertools.product(L.elements, repeat=count)
    else:
        rng = random.Random(strategy.seed + 1)
        for _ in range(strategy.trials):
            yield tuple(L.sample(rng) for _ in range(count))


def _precheck(T: MapUnderTest, strategy, budget: int) -> EquivalenceReport:
    _require_bottom(T.domain)
    cert = is_toi(T, strategy, budget)
    if not cert.passed:
        return EquivalenceReport("precondition-failed", toi=cert)
    return EquivalenceReport("ok", holds_i=True, holds_ii=True, toi=cert)


def check_genorthosym(
    T: MapUnderTest, a, strategy: Exhaustive | Sampled = EXHAUSTIVE, budget: int = EXHAUSTIVE_BUDGET
) -> EquivalenceReport:
    """For TOI ``T`` on a lattice with bottom, compare

    (i)  ``T(xs) == a`` whenever some ``xs[i] & xs[j]`` is the bottom, and
    (ii) ``T(bottom, ys) == a`` for every ``ys``.
    """
    report = _precheck(T, strategy, budget)
    if report.status == "precondition-failed":
        return report
    theta = T.domain.bottom
    for xs in _condition_tuples(T, strategy, pairwise=False):
        report.checked += 1
        if not T.equal(T(xs), a):
            report.holds_i, report.witness_i = False, xs
            break
    for ys in _tail_tuples(T, strategy, T.arity - 1):
        report.checked += 1
        xs = (theta,) + ys
        if not T.equal(T(xs), a):
            report.holds_ii, report.witness_ii = False, xs
            break
    return _finish(report)


def check_genorthsteady(
    T: MapUnderTest,
    phi: Callable,
    strategy: Exhaustive | Sampled = EXHAUSTIVE,
    budget: int = EXHAUSTIVE_BUDGET,
) -> EquivalenceReport:
    """For TOI ``T`` on a lattice with bottom, compare

    (i)  ``T(xs) == phi(join(xs))`` whenever the ``xs`` are pairwise disjoint, and
    (ii) ``T(bottom, ..., bottom, x) == phi(x)`` for every ``x``.
    """
    report = _precheck(T, strategy, budget)
    if report.status == "precondition-failed":
        return report
    L = T.domain
    theta = L.bottom
    for xs in _condition_tuples(T, strategy, pairwise=True):
        report.checked += 1
        if not T.equal(T(xs), phi(L.join_all(xs))):
            report.holds_i, report.witness_i = False, xs
            break
    for (x,) in _tail_tuples(T, strategy, 1):
        report.checked += 1
        xs = (theta,) * (T.arity - 1) + (x,)
        if not T.equal(T(xs), phi(x)):
            report.holds_ii, report.witness_ii = False, xs
            break
    return _finish(report)


def tolerance_equal(tol: float) -> Callable[[Any, Any], bool]:
    """Comparator for float codomains: scalars, tuples, or CoordTuples."""

    def eq(a, b) -> bool:
        if isinstance(a, Real) and isinstance(b, Real):
            return math.isclose(a, b, rel_tol=tol, abs_tol=tol)
        return len(a) == len(b) and all(eq(x, y) for x, y in zip(a, b))

    return eq
