"""Median, the order-statistic operators M_k and total orderization.

``m_k`` is the combinatorial definition: the join, over all
``(n+1-k)``-element index subsets, of the meet of the subset. Its dual is
the meet, over all ``k``-element subsets, of the join. Both are evaluated
on finite carriers and must agree; a mismatch means the carrier is not
distributive.

``m_k_pointwise`` is the fast path on coordinate tuples: the k-th smallest
value of each coordinate fiber.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from latticemed.coords import CoordTuple
from latticemed.lattice import DistributiveLattice, FiniteLattice

MAX_COMBINATORIAL_ARITY = 12


class DistributivityError(ValueError):
    """Primal and dual forms disagree, or the carrier failed the distributivity scan."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def require_distributive(L: DistributiveLattice) -> None:
    if isinstance(L, FiniteLattice) and not L.is_distributive:
        w = L.distributivity_witness
        raise DistributivityError(f"lattice is not distributive; failing triple {w}", witness=w)


def median3(L: DistributiveLattice, x, y, z):
    for a in (x, y, z):
        L.check(a)
    require_distributive(L)
    meet, join = L.meet, L.join
    primal = join(join(meet(x, y), meet(x, z)), meet(y, z))
    dual = meet(meet(join(x, y), join(x, z)), join(y, z))
    if primal != dual:
        raise DistributivityError(f"median forms disagree on {(x, y, z)!r}", witness=(x, y, z))
    return primal


def primal_form(L: DistributiveLattice, xs: Sequence, k: int):
    """Join over (n+1-k)-subsets of their meets."""
    return L.join_all(L.meet_all(c) for c in combinations(xs, len(xs) + 1 - k))


def dual_form(L: DistributiveLattice, xs: Sequence, k: int):
    """Meet over k-subsets of their joins."""
    return L.meet_all(L.join_all(c) for c in combinations(xs, k))


def _validate(L: DistributiveLattice, xs: Sequence) -> int:
    n = len(xs)
    if n < 1:
        raise ValueError("need at least one element")
    if n > MAX_COMBINATORIAL_ARITY:
        raise ValueError(
            f"combinatorial M_k is capped at n <= {MAX_COMBINATORIAL_ARITY} (got {n}); "
            "use m_k_pointwise for coordinate tuples"
        )
    for x in xs:
        L.check(x)
    require_distributive(L)
    return n


def _m_k(L, xs, k, check_dual):
    value = primal_form(L, xs, k)
    if check_dual:
        other = dual_form(L, xs, k)
        if other != value:
            raise DistributivityError(
                f"M_{k} primal {value!r} != dual {other!r} on {tuple(xs)!r}", witness=tuple(xs)
            )
    return value


def m_k(L: DistributiveLattice, xs: Sequence, k: int, check_dual: bool | None = None):
    """The k-th order statistic of ``xs`` in ``L`` (1-based ``k``).

    ``check_dual`` defaults to True on finite carriers and False on
    pointwise ones, where callers spot-check it explicitly.
    """
    n = _validate(L, xs)
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    if check_dual is None:
        check_dual = L.is_finite
    return _m_k(L, xs, k, check_dual)


@dataclass(frozen=True)
class TotalOrderization:
    values: tuple
    source: tuple

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]


def total_orderization(L: DistributiveLattice, xs: Sequence, check_dual: bool | None = None) -> TotalOrderization:
    n = _validate(L, xs)
    if check_dual is None:
        check_dual = L.is_finite
    values = tuple(_m_k(L, xs, k, check_dual) for k in range(1, n + 1))
    return TotalOrderization(values=values, source=tuple(xs))


def orderize_finite(L: FiniteLattice, xs: Sequence[int]) -> tuple[int, ...]:
    """Unchecked total orderization on table-backed carriers.

    Inner-loop helper for exhaustive suites; the caller must already have
    validated the elements and the distributivity of ``L``. Primal and
    dual forms are still compared.
    """
    mt, jt = L.meet_table, L.join_table
    n = len(xs)
    out = []
    for k in range(1, n + 1):
        p = None
        for c in combinations(xs, n + 1 - k):
            v = c[0]
            for x in c[1:]:
                v = mt[v][x]
            p = v if p is None else jt[p][v]
        d = None
        for c in combinations(xs, k):
            v = c[0]
            for x in c[1:]:
                v = jt[v][x]
            d = v if d is None else mt[d][v]
        if p != d:
            raise DistributivityError(f"M_{k} primal {p} != dual {d} on {tuple(xs)}", witness=tuple(xs))
        out.append(p)
    return tuple(out)


def m_k_pointwise(fs: Sequence[CoordTuple], k: int) -> CoordTuple:
    """Coordinatewise k-th smallest value, by selection on each fiber."""
    n = len(fs)
    if n < 1:
        raise ValueError("need at least one tuple")
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    dim = fs[0].dim
    if any(f.dim != dim for f in fs):
        raise ValueError("dimension mismatch")
    return CoordTuple(heapq.nsmallest(k, fiber)[-1] for fiber in zip(*(f.coords for f in fs)))


def total_orderization_pointwise(fs: Sequence[CoordTuple]) -> tuple[CoordTuple, ...]:
    """All n order statistics at once: sort each fiber."""
    if not fs:
        raise ValueError("need at least one tuple")
    dim = fs[0].dim
    if any(f.dim != dim for f in fs):
        raise ValueError("dimension mismatch")
    fibers = [sorted(fiber) for fiber in zip(*(f.coords for f in fs))]
    return tuple(CoordTuple(fiber[k] for fiber in fibers) for k in range(len(fs)))
