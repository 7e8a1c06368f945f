"""Distributive lattice carriers and the basic order predicates.

Two kinds of carrier are provided:

* :class:`FiniteLattice` stores complete meet/join tables over integer
  element handles ``0..size-1``.
* :class:`PointwiseLattice` is ``Q^m`` (or its positive cone) under the
  coordinatewise order; elements are :class:`~latticemed.coords.CoordTuple`.

The order is always derived from meet: ``a <= b`` iff ``a & b == a``.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Sequence

from latticemed.coords import CoordTuple


class LatticeDomainError(ValueError):
    """An element does not belong to the lattice it was used with."""


class UnsupportedError(ValueError):
    """The requested strategy cannot run on this carrier or budget."""


@dataclass(frozen=True)
class Exhaustive:
    pass


@dataclass(frozen=True)
class Sampled:
    trials: int
    seed: int


EXHAUSTIVE = Exhaustive()

LAWS = ("commutativity", "associativity", "idempotence", "absorption", "distributivity")


class DistributiveLattice:
    """Interface shared by every carrier.

    Subclasses implement ``meet``, ``join``, ``contains`` and ``sample``.
    ``bottom``/``top`` are ``None`` when the carrier has no such element.
    """

    bottom: Any = None
    top: Any = None
    is_finite: bool = False

    def meet(self, a, b):
        raise NotImplementedError

    def join(self, a, b):
        raise NotImplementedError

    def contains(self, a) -> bool:
        raise NotImplementedError

    def sample(self, rng: random.Random):
        raise NotImplementedError

    def check(self, a):
        if not self.contains(a):
            raise LatticeDomainError(f"{a!r} is not an element of {self!r}")
        return a

    def meet_all(self, xs: Iterable):
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.meet(acc, x)
        return acc

    def join_all(self, xs: Iterable):
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.join(acc, x)
        return acc

    def leq(self, a, b) -> bool:
        return self.meet(a, b) == a

    @property
    def is_distributive(self) -> bool:
        return True


class FiniteLattice(DistributiveLattice):
    """A finite lattice given by full meet and join tables.

    Distributivity is not assumed at construction time (the M3 and N5
    fixtures are built this way); :attr:`is_distributive` performs an
    exhaustive scan once and caches the result.
    """

    is_finite = True

    def __init__(
        self,
        names: Sequence[str],
        meet_table: Sequence[Sequence[int]],
        join_table: Sequence[Sequence[int]],
        bottom: int | None = None,
        top: int | None = None,
    ):
        size = len(names)
        if size == 0:
            raise ValueError("a lattice needs at least one element")
        for table in (meet_table, join_table):
            if len(table) != size or any(len(row) != size for row in table):
                raise ValueError(f"tables must be {size}x{size}")
            if any(not 0 <= v < size for row in table for v in row):
                raise ValueError("table entry out of range")
        self.names = tuple(names)
        self.size = size
        self._meet = tuple(tuple(row) for row in meet_table)
        self._join = tuple(tuple(row) for row in join_table)
        self.bottom = bottom
        self.top = top
        if bottom is not None and any(self._meet[bottom][a] != bottom for a in range(size)):
            raise ValueError(f"{names[bottom]!r} is not a bottom element")
        if top is not None and any(self._join[top][a] != top for a in range(size)):
            raise ValueError(f"{names[top]!r} is not a top element")

    def __repr__(self) -> str:
        return f"FiniteLattice(size={self.size})"

    @property
    def elements(self) -> range:
        return range(self.size)

    def meet(self, a: int, b: int) -> int:
        return self._meet[a][b]

    def join(self, a: int, b: int) -> int:
        return self._join[a][b]

    @property
    def meet_table(self) -> tuple[tuple[int, ...], ...]:
        return self._meet

    @property
    def join_table(self) -> tuple[tuple[int, ...], ...]:
        return self._join

    def contains(self, a) -> bool:
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.size

    def sample(self, rng: random.Random) -> int:
        return rng.randrange(self.size)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise LatticeDomainError(f"no element named {name!r}") from None

    @cached_property
    def distributivity_witness(self) -> tuple[int, int, int] | None:
        m, j = self._meet, self._join
        n = self.size
        for a in range(n):
            ma = m[a]
            for b in range(n):
                mab = ma[b]
                for c in range(n):
                    if ma[j[b][c]] != j[mab][ma[c]]:
                        return (a, b, c)
        return None

    @property
    def is_distributive(self) -> bool:
        return self.distributivity_witness is None

    def to_json(self) -> dict:
        return {
            "elements": list(self.names),
            "meet": [list(r) for r in self._meet],
            "join": [list(r) for r in self._join],
            "bottom": self.bottom,
            "top": self.top,
        }

    @classmethod
    def from_json(cls, data: dict) -> "FiniteLattice":
        return cls(data["elements"], data["meet"], data["join"], data.get("bottom"), data.get("top"))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteLattice) and self.to_json() == other.to_json()

    def __hash__(self) -> int:
        return hash((self.names, self._meet, self._join))


class PointwiseLattice(DistributiveLattice):
    """Coordinate tuples of a fixed dimension under the pointwise order.

    With ``positive=True`` the carrier is the positive cone, whose bottom
    is the zero tuple. Sampling draws integer coordinates from
    ``[low, high]`` (``[0, high]`` on the cone).
    """

    def __init__(self, dim: int, positive: bool = False, low: int = -5, high: int = 5):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        self.positive = positive
        self.low = 0 if positive else low
        self.high = high
        self.bottom = CoordTuple.zeros(dim) if positive else None

    def __repr__(self) -> str:
        cone = ", positive" if self.positive else ""
        return f"PointwiseLattice(dim={self.dim}{cone})"

    def meet(self, a, b):
        return a & b

    def join(self, a, b):
        return a | b

    def contains(self, a) -> bool:
        if not isinstance(a, CoordTuple) or a.dim != self.dim:
            return False
        return not self.positive or a.is_positive()

    def sample(self, rng: random.Random):
        return CoordTuple(rng.randint(self.low, self.high) for _ in range(self.dim))

    def sample_disjoint(self, rng: random.Random, n: int, pairwise: bool):
        """Sample an n-tuple in which a chosen pair (or every pair) is disjoint.

        Disjointness is forced coordinate by coordinate: for a single pair
        ``(i, j)`` one of the two is zeroed at each coordinate; with
        ``pairwise`` at most one slot stays nonzero per coordinate.
        """
        cols = [[rng.randint(self.low, self.high) for _ in range(n)] for _ in range(self.dim)]
        if pairwise:
            for col in cols:
                keep = rng.randrange(n + 1)
                for s in range(n):
                    if s != keep:
                        col[s] = 0
        elif n >= 2:
            i, j = rng.sample(range(n), 2)
            for col in cols:
                col[rng.choice((i, j))] = 0
        else:
            for col in cols:
                col[0] = 0
        return tuple(CoordTuple(col[s] for col in cols) for s in range(n))


@dataclass
class LawReport:
    strategy: Any
    results: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, tuple] = field(default_factory=dict)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return all(self.results.values())

    def failures(self) -> list[str]:
        return [law for law, ok in self.results.items() if not ok]


def leq(L: DistributiveLattice, a, b) -> bool:
    L.check(a)
    L.check(b)
    return L.meet(a, b) == a


def is_chain(L: DistributiveLattice, xs: Sequence) -> bool:
    """True iff the elements are pairwise comparable (vacuously for ``[]``)."""
    for x in xs:
        L.check(x)
    for a, b in itertools.combinations(xs, 2):
        m = L.meet(a, b)
        if m != a and m != b:
            return False
    return True


def _law_violations(L: DistributiveLattice, a, b, c):
    meet, join = L.meet, L.join
    yield "commutativity", meet(a, b) == meet(b, a) and join(a, b) == join(b, a)
    yield "associativity", (
        meet(meet(a, b), c) == meet(a, meet(b, c)) and join(join(a, b), c) == join(a, join(b, c))
    )
    yield "idempotence", meet(a, a) == a and join(a, a) == a
    yield "absorption", meet(a, join(a, b)) == a and join(a, meet(a, b)) == a
    yield "distributivity", (
        meet(a, join(b, c)) == join(meet(a, b), meet(a, c))
        and join(a, meet(b, c)) == meet(join(a, b), join(a, c))
    )


def verify_lattice_laws(L: DistributiveLattice, strategy: Exhaustive | Sampled = EXHAUSTIVE) -> LawReport:
    """Check the lattice and distributive laws on triples of elements.

    Exhaustive mode scans every triple of a finite carrier; sampled mode
    draws ``trials`` triples from ``L.sample`` with the given seed. The first
    failing triple of each law is kept as its witness.
    """
    if isinstance(strategy, Exhaustive):
        if not L.is_finite:
            raise UnsupportedError("exhaustive law check needs a finite carrier")
        triples: Iterable = itertools.product(L.elements, repeat=3)
    else:
        rng = random.Random(strategy.seed)
        triples = ((L.sample(rng), L.sample(rng), L.sample(rng)) for _ in range(strategy.trials))

    report = LawReport(strategy=strategy, results={law: True for law in LAWS})
    for triple in triples:
        report.checked += 1
        for law, ok in _law_violations(L, *triple):
            if not ok and report.results[law]:
                report.results[law] = False
                report.witnesses[law] = triple
    return report
