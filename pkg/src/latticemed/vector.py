"""Positively homogeneous functional calculus on coordinate spaces.

On ``R^m`` the nonzero real-valued lattice homomorphisms are the positive
multiples of coordinate evaluations, so ``h(f_1, ..., f_n)`` is computed
coordinate by coordinate. Continuity of user-supplied ``h`` is taken on
trust; positive homogeneity can be sample-checked with
:func:`check_homogeneity`.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from latticemed.coords import CoordTuple
from latticemed.lattice import PointwiseLattice
from latticemed.orderization import total_orderization


@dataclass(frozen=True)
class PHFunction:
    arity: int
    fn: Callable
    symmetric: bool
    name: str = "h"

    def __call__(self, *xs):
        if len(xs) != self.arity:
            raise ValueError(f"{self.name} takes {self.arity} arguments, got {len(xs)}")
        return self.fn(*xs)


def signed_root(s, n: int) -> float:
    """Real n-th root; negative radicands only for odd n."""
    s = float(s)
    if s >= 0:
        return s ** (1.0 / n)
    if n % 2 == 0:
        raise ValueError("even root of a negative number")
    return -((-s) ** (1.0 / n))


def sum_ph(n: int) -> PHFunction:
    return PHFunction(n, lambda *xs: sum(xs), True, f"sum{n}")


def min_ph(n: int) -> PHFunction:
    return PHFunction(n, lambda *xs: min(xs), True, f"min{n}")


def max_ph(n: int) -> PHFunction:
    return PHFunction(n, lambda *xs: max(xs), True, f"max{n}")


def geometric_mean(n: int) -> PHFunction:
    """``(prod |x_k|)^(1/n)``."""

    def g(*xs):
        return math.prod(abs(float(x)) for x in xs) ** (1.0 / n)

    return PHFunction(n, g, True, f"G{n}")


def power_root_sum(arity: int, degree: int | None = None) -> PHFunction:
    """``(sum x_k^degree)^(1/degree)``; ``degree`` defaults to the arity.

    Odd degrees take the signed real root so the function is defined on
    all of ``R^arity``.
    """
    n = arity if degree is None else degree

    def s(*xs):
        return signed_root(sum(x**n for x in xs), n)

    return PHFunction(arity, s, True, f"S{arity}^{n}")


def projection(n: int, i: int = 0) -> PHFunction:
    return PHFunction(n, lambda *xs: xs[i], n == 1, f"pi{i + 1}")


def apply_ph(h: PHFunction, fs: Sequence[CoordTuple]) -> CoordTuple:
    if len(fs) != h.arity:
        raise ValueError(f"{h.name} has arity {h.arity}, got {len(fs)} tuples")
    dim = fs[0].dim
    if any(f.dim != dim for f in fs):
        raise ValueError("dimension mismatch")
    return CoordTuple(h(*fiber) for fiber in zip(*(f.coords for f in fs)))


@dataclass
class HomogeneityReport:
    passed: bool
    trials: int
    seed: int
    witness: tuple | None = None  # (x, lam, h(lam x), lam h(x))


def check_homogeneity(h: PHFunction, trials: int = 1000, seed: int = 0, tol: float = 1e-9) -> HomogeneityReport:
    """Sample ``|h(lam x) - lam h(x)| <= tol (1 + |h(x)|)`` for ``lam`` in [0, 8]."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    rng = random.Random(seed)
    for t in range(trials):
        x = [rng.uniform(-5, 5) for _ in range(h.arity)]
        lam = rng.uniform(0, 8)
        hx = h(*x)
        lhs = h(*(lam * v for v in x))
        if abs(lhs - lam * hx) > tol * (1 + abs(hx)):
            return HomogeneityReport(False, t + 1, seed, (tuple(x), lam, lhs, lam * hx))
    return HomogeneityReport(True, trials, seed)


@dataclass(frozen=True)
class BoxtimesGrid:
    points: int = 4096
    log2_range: float = 20.0
    refine_steps: int = 60


_INVPHI = (math.sqrt(5) - 1) / 2


def _golden_min(phi: Callable[[float], float], lo: float, hi: float, steps: int) -> float:
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    fc, fd = phi(c), phi(d)
    for _ in range(steps):
        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - _INVPHI * (hi - lo)
            fc = phi(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INVPHI * (hi - lo)
            fd = phi(d)
    return min(fc, fd)


def _boxtimes_scalar(a: float, b: float, grid: BoxtimesGrid, ts: np.ndarray) -> float:
    if a == 0 or b == 0:
        # theta -> 0 or theta -> infinity drives the objective to 0; not attained
        return 0.0
    vals = 0.5 * (a * np.exp(ts) + b * np.exp(-ts))
    i = int(np.argmin(vals))
    lo = ts[max(i - 1, 0)]
    hi = ts[min(i + 1, len(ts) - 1)]
    refined = _golden_min(lambda t: 0.5 * (a * math.exp(t) + b * math.exp(-t)), lo, hi, grid.refine_steps)
    return min(float(vals[i]), refined)


def boxtimes_inf(f: CoordTuple, g: CoordTuple, grid: BoxtimesGrid = BoxtimesGrid()) -> CoordTuple:
    """Pointwise ``1/2 inf{theta f + g/theta : theta > 0}`` over a log-spaced theta grid.

    Each coordinate's objective is convex in ``log theta``: the grid locates
    the basin and golden-section search refines it.
    """
    if f.dim != g.dim:
        raise ValueError("dimension mismatch")
    if not (f.is_positive() and g.is_positive()):
        raise ValueError("boxtimes is defined on the positive cone only")
    span = grid.log2_range * math.log(2)
    ts = np.linspace(-span, span, grid.points)
    return CoordTuple(_boxtimes_scalar(float(a), float(b), grid, ts) for a, b in zip(f, g))


def disjoint(f: CoordTuple, g: CoordTuple) -> bool:
    return (f.abs() & g.abs()).is_zero()


def _require_exact(fs: Sequence[CoordTuple]) -> None:
    if not all(f.exact for f in fs):
        raise ValueError("exact identity checks need rational coordinates")


def _orderized(fs: Sequence[CoordTuple], check_dual: bool) -> tuple[CoordTuple, ...]:
    L = PointwiseLattice(fs[0].dim)
    return total_orderization(L, list(fs), check_dual=check_dual).values


def sum_invariance_sides(fs: Sequence[CoordTuple], check_dual: bool = False) -> tuple[CoordTuple, CoordTuple]:
    _require_exact(fs)
    ms = _orderized(fs, check_dual)
    lhs, rhs = fs[0], ms[0]
    for f, m in zip(fs[1:], ms[1:]):
        lhs, rhs = lhs + f, rhs + m
    return lhs, rhs


def sum_invariance_check(fs: Sequence[CoordTuple], check_dual: bool = False) -> bool:
    lhs, rhs = sum_invariance_sides(fs, check_dual)
    return lhs == rhs


def product_invariance_sides(fs: Sequence[CoordTuple], check_dual: bool = False) -> tuple[CoordTuple, CoordTuple]:
    """Pointwise products, the multiplication of the f-algebra ``Q^m``."""
    _require_exact(fs)
    ms = _orderized(fs, check_dual)
    lhs, rhs = fs[0], ms[0]
    for f, m in zip(fs[1:], ms[1:]):
        lhs, rhs = lhs * f, rhs * m
    return lhs, rhs


def product_invariance_check(fs: Sequence[CoordTuple], check_dual: bool = False) -> bool:
    lhs, rhs = product_invariance_sides(fs, check_dual)
    return lhs == rhs


def random_rational_tuple(rng: random.Random, dim: int, bound: int = 5) -> CoordTuple:
    """Coordinates ``p/q`` with ``|p| <= bound``, ``1 <= q <= 4``; ints when ``q == 1``."""

    def draw():
        q = Fraction(rng.randint(-bound, bound), rng.randint(1, 4))
        return q.numerator if q.denominator == 1 else q

    return CoordTuple(draw() for _ in range(dim))
