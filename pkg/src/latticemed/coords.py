"""Finite coordinate tuples: the concrete vector lattice ``Q^m``."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable


def _exact(x) -> bool:
    return isinstance(x, Rational)


def parse_number(x):
    """Read a JSON coordinate: ints and ``"p/q"`` strings stay exact."""
    if isinstance(x, bool):
        raise ValueError(f"not a number: {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        q = Fraction(x)
        return q.numerator if q.denominator == 1 else q
    if isinstance(x, float):
        return x
    raise ValueError(f"not a number: {x!r}")


def format_number(x) -> str:
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return str(x)


class CoordTuple:
    """An immutable point of ``R^m`` with pointwise lattice operations.

    ``&``/``|`` are pointwise min/max; ``+``, ``-`` and scalar ``*`` are the
    vector operations. Coordinates may be ints, Fractions or floats; exact
    inputs give exact outputs.
    """

    __slots__ = ("coords", "_hash")

    def __init__(self, coords: Iterable):
        self.coords = tuple(coords)
        self._hash = None

    @classmethod
    def zeros(cls, dim: int) -> "CoordTuple":
        return cls((0,) * dim)

    @classmethod
    def basis(cls, dim: int, i: int, value=1) -> "CoordTuple":
        return cls(value if a == i else 0 for a in range(dim))

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def exact(self) -> bool:
        return all(_exact(c) for c in self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, CoordTuple):
            return self.coords == other.coords
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coords)
        return self._hash

    def __repr__(self) -> str:
        return "(" + ", ".join(format_number(c) for c in self.coords) + ")"

    def _same_dim(self, other: "CoordTuple") -> None:
        if not isinstance(other, CoordTuple):
            raise TypeError(f"expected CoordTuple, got {type(other).__name__}")
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __and__(self, other: "CoordTuple") -> "CoordTuple":
        self._same_dim(other)
        return CoordTuple(a if a <= b else b for a, b in zip(self.coords, other.coords))

    def __or__(self, other: "CoordTuple") -> "CoordTuple":
        self._same_dim(other)
        return CoordTuple(b if a <= b else a for a, b in zip(self.coords, other.coords))

    def __add__(self, other: "CoordTuple") -> "CoordTuple":
        self._same_dim(other)
        return CoordTuple(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "CoordTuple") -> "CoordTuple":
        self._same_dim(other)
        return CoordTuple(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "CoordTuple":
        return CoordTuple(-a for a in self.coords)

    def __mul__(self, scalar) -> "CoordTuple":
        if isinstance(scalar, CoordTuple):
            self._same_dim(scalar)
            return CoordTuple(a * b for a, b in zip(self.coords, scalar.coords))
        return CoordTuple(scalar * a for a in self.coords)

    __rmul__ = __mul__

    def pos(self) -> "CoordTuple":
        return CoordTuple(a if a > 0 else 0 for a in self.coords)

    def neg(self) -> "CoordTuple":
        return CoordTuple(-a if a < 0 else 0 for a in self.coords)

    def abs(self) -> "CoordTuple":
        return CoordTuple(abs(a) for a in self.coords)

    def is_positive(self) -> bool:
        return all(a >= 0 for a in self.coords)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, a in enumerate(self.coords) if a != 0)

    def sup_norm(self):
        return max((abs(a) for a in self.coords), default=0)

    def isclose(self, other: "CoordTuple", rel_tol: float = 1e-9, abs_tol: float = 0.0) -> bool:
        self._same_dim(other)
        return all(
            math.isclose(a, b, rel_tol=rel_tol, abs_tol=abs_tol) for a, b in zip(self.coords, other.coords)
        )

    def to_json(self) -> dict:
        exact = self.exact
        coords = [format_number(c) for c in self.coords] if exact else [float(c) for c in self.coords]
        return {"dim": self.dim, "coords": coords, "exact": exact}

    @classmethod
    def from_json(cls, data) -> "CoordTuple":
        """Accept the ``{"dim", "coords", "exact"}`` object or a bare list."""
        if isinstance(data, list):
            return cls(parse_number(x) for x in data)
        coords = [parse_number(x) for x in data["coords"]]
        if "dim" in data and data["dim"] != len(coords):
            raise ValueError(f"dim {data['dim']} does not match {len(coords)} coordinates")
        if not data.get("exact", True):
            coords = [float(x) for x in coords]
        return cls(coords)
