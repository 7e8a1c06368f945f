"""Multilinear maps ``(Q^m)^n -> Q^p``, homogeneous polynomials and power sums.

Maps are stored as dense coefficient tensors: ``entry(i_1, ..., i_n)`` is
a codomain vector, and

    T(f_1, ..., f_n) = sum over index tuples of entry(i) * f_1(i_1) ... f_n(i_n).

Every multilinear map on a finite-dimensional space is bounded, so the
boundedness hypotheses of the characterization theorems hold automatically.
Codomain points are plain tuples of exact numbers.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from latticemed.coords import CoordTuple, format_number, parse_number
from latticemed.invariance import Certificate, MapUnderTest
from latticemed.lattice import PointwiseLattice, Sampled, UnsupportedError
from latticemed.vector import apply_ph, power_root_sum

MAX_ORDER = 4
MAX_DIM = 6
EXACT_BUDGET = 10**6


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Exact:
    """Enumerate integer inputs with coordinates in ``[-bound, bound]``."""

    bound: int = 3


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(_norm(a + b) for a, b in zip(u, v))


def vsum(vs: Iterable[Sequence], p: int) -> tuple:
    acc = (0,) * p
    for v in vs:
        acc = vadd(acc, v)
    return acc


def _vector(value, p: int) -> tuple:
    if isinstance(value, (list, tuple)):
        if len(value) != p:
            raise ValueError(f"codomain vectors need {p} components")
        return tuple(_norm(v) for v in value)
    if p != 1:
        raise ValueError("scalar entries need codim 1")
    return (_norm(value),)


class MultilinearMap:
    def __init__(self, order: int, dim: int, codim: int, entries: Mapping[tuple, object] | None = None):
        if not 1 <= order <= MAX_ORDER:
            raise ValueError(f"order must lie in [1, {MAX_ORDER}]")
        if not 1 <= dim <= MAX_DIM:
            raise ValueError(f"dim must lie in [1, {MAX_DIM}]")
        if codim < 1:
            raise ValueError("codim must be positive")
        self.order, self.dim, self.codim = order, dim, codim
        zero = (0,) * codim
        self._dense = [zero] * dim**order
        for index, value in (entries or {}).items():
            self._dense[self._flat(index)] = _vector(value, codim)

    def _flat(self, index: Sequence[int]) -> int:
        if len(index) != self.order or any(not 0 <= i < self.dim for i in index):
            raise IndexError(f"bad index {index} for order {self.order}, dim {self.dim}")
        flat = 0
        for i in index:
            flat = flat * self.dim + i
        return flat

    def entry(self, index: Sequence[int]) -> tuple:
        return self._dense[self._flat(index)]

    def indices(self):
        return itertools.product(range(self.dim), repeat=self.order)

    @cached_property
    def nonzero(self) -> list[tuple[tuple[int, ...], tuple]]:
        return [(idx, v) for idx, v in zip(self.indices(), self._dense) if any(v)]

    @classmethod
    def diagonal(cls, order: int, weights: Sequence, codim: int = 1) -> "MultilinearMap":
        dim = len(weights)
        return cls(order, dim, codim, {(a,) * order: w for a, w in enumerate(weights)})

    def __call__(self, *fs: CoordTuple) -> tuple:
        if len(fs) != self.order:
            raise ValueError(f"expected {self.order} arguments, got {len(fs)}")
        if any(f.dim != self.dim for f in fs):
            raise ValueError(f"arguments must have dimension {self.dim}")
        acc = [0] * self.codim
        cs = [f.coords for f in fs]
        for idx, value in self.nonzero:
            coef = 1
            for c, i in zip(cs, idx):
                coef *= c[i]
                if not coef:
                    break
            if coef:
                for q in range(self.codim):
                    acc[q] += coef * value[q]
        return tuple(_norm(a) for a in acc)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultilinearMap)
            and (self.order, self.dim, self.codim) == (other.order, other.dim, other.codim)
            and self._dense == other._dense
        )

    def __repr__(self) -> str:
        return f"MultilinearMap(order={self.order}, dim={self.dim}, codim={self.codim}, nonzero={len(self.nonzero)})"

    def is_diagonal(self) -> bool:
        return all(len(set(idx)) == 1 for idx, _ in self.nonzero)

    def is_symmetric(self) -> bool:
        return self == symmetrize(self)

    def as_map(self, positive: bool = False, bound: int = 3) -> MapUnderTest:
        """Wrap as a map on ``Q^m`` (or its positive cone) sampling ``[-bound, bound]``."""
        L = PointwiseLattice(self.dim, positive=positive, low=-bound, high=bound)
        return MapUnderTest(self.order, L, lambda xs: self(*xs), name="T+" if positive else "T")

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "dim": self.dim,
            "codim": self.codim,
            "entries": [
                {"index": list(idx), "value": [_json_number(v) for v in value]} for idx, value in self.nonzero
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MultilinearMap":
        entries = {
            tuple(e["index"]): [parse_number(v) for v in e["value"]] for e in data.get("entries", [])
        }
        return cls(data["order"], data["dim"], data["codim"], entries)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _json_number(x):
    return x if isinstance(x, int) else format_number(x) if isinstance(x, Fraction) else x


def eval_multilinear(T: MultilinearMap, fs: Sequence[CoordTuple]) -> tuple:
    return T(*fs)


def symmetrize(T: MultilinearMap) -> MultilinearMap:
    """Average of the coefficient tensor over all permutations of the slots."""
    perms = list(itertools.permutations(range(T.order)))
    total = len(perms)
    sums: dict[tuple, tuple] = {}
    for idx, value in T.nonzero:
        for p in perms:
            key = tuple(idx[i] for i in p)
            sums[key] = vadd(sums.get(key, (0,) * T.codim), value)
    entries = {k: tuple(_norm(Fraction(v) / total) for v in vec) for k, vec in sums.items()}
    return MultilinearMap(T.order, T.dim, T.codim, entries)


def power_args(counts: Sequence[tuple[CoordTuple, int]]) -> tuple[CoordTuple, ...]:
    """``T(f_1^{k_1} ... f_m^{k_m})``: repeat each argument ``k_i`` times."""
    return tuple(f for f, k in counts for _ in range(k))


class HomogeneousPolynomial:
    """An n-homogeneous polynomial ``Q^m -> Q^p``.

    Either generated by a multilinear map, ``P(f) = T(f, ..., f)``, or in
    diagonal form ``P(f) = sum_a c_a f(a)^n``.
    """

    def __init__(self, degree: int, dim: int, codim: int, tensor: MultilinearMap | None = None, weights=None):
        if (tensor is None) == (weights is None):
            raise ValueError("give exactly one of tensor or weights")
        self.degree, self.dim, self.codim = degree, dim, codim
        self.tensor = tensor
        self.weights = None if weights is None else tuple(_vector(w, codim) for w in weights)

    @classmethod
    def generated(cls, T: MultilinearMap) -> "HomogeneousPolynomial":
        return cls(T.order, T.dim, T.codim, tensor=T)

    @classmethod
    def diagonal(cls, degree: int, weights: Sequence, codim: int = 1) -> "HomogeneousPolynomial":
        return cls(degree, len(weights), codim, weights=weights)

    def __repr__(self) -> str:
        form = "diagonal" if self.weights is not None else "generated"
        return f"HomogeneousPolynomial({form}, degree={self.degree}, dim={self.dim}, codim={self.codim})"

    def __call__(self, f: CoordTuple) -> tuple:
        if f.dim != self.dim:
            raise ValueError(f"argument must have dimension {self.dim}")
        if self.weights is None:
            return self.tensor(*([f] * self.degree))
        n = self.degree
        acc = [0] * self.codim
        for x, w in zip(f.coords, self.weights):
            if x:
                xn = x**n
                for q in range(self.codim):
                    acc[q] += xn * w[q]
        return tuple(_norm(a) for a in acc)

    def monomial_coefficients(self) -> dict[tuple[int, ...], tuple]:
        """Coefficient vector of each monomial, keyed by its sorted index multiset."""
        if self.weights is not None:
            return {(a,) * self.degree: w for a, w in enumerate(self.weights) if any(w)}
        out: dict[tuple, tuple] = {}
        for idx, value in self.tensor.nonzero:
            key = tuple(sorted(idx))
            out[key] = vadd(out.get(key, (0,) * self.codim), value)
        return {k: v for k, v in out.items() if any(v)}

    def diagonal_weights(self) -> tuple | None:
        """Per-coordinate weights when every mixed monomial vanishes, else None."""
        if self.weights is not None:
            return self.weights
        coeffs = self.monomial_coefficients()
        if any(len(set(k)) > 1 for k in coeffs):
            return None
        zero = (0,) * self.codim
        return tuple(coeffs.get((a,) * self.degree, zero) for a in range(self.dim))


class PowerSumPolynomial:
    """``S(u_1, ..., u_r) = P(u_1) + ... + P(u_r)``."""

    def __init__(self, P: HomogeneousPolynomial, r: int):
        if r < 1:
            raise ValueError("need at least one variable")
        self.P, self.r = P, r

    def __repr__(self) -> str:
        return f"PowerSumPolynomial({self.P!r}, r={self.r})"

    def __call__(self, *us: CoordTuple) -> tuple:
        if len(us) != self.r:
            raise ValueError(f"expected {self.r} arguments, got {len(us)}")
        return vsum((self.P(u) for u in us), self.P.codim)

    def as_map(self, positive: bool = False, bound: int = 3) -> MapUnderTest:
        L = PointwiseLattice(self.P.dim, positive=positive, low=-bound, high=bound)
        return MapUnderTest(self.r, L, lambda xs: self(*xs), name="S+" if positive else "S")


def _nonzero_values(bound: int, positive: bool) -> list[int]:
    vals = range(1, bound + 1) if positive else [v for v in range(-bound, bound + 1) if v]
    return list(vals)


def disjoint_pairs(dim: int, bound: int, positive: bool = False, budget: int = EXACT_BUDGET):
    """Every pair ``(f, g)`` of integer tuples with disjoint supports.

    Each coordinate is zero in both, or nonzero in exactly one of them.
    """
    vals = _nonzero_values(bound, positive)
    options = [(0, 0)] + [(v, 0) for v in vals] + [(0, v) for v in vals]
    if len(options) ** dim > budget:
        raise UnsupportedError(f"{len(options)}^{dim} pairs exceed the budget of {budget}")
    for combo in itertools.product(options, repeat=dim):
        yield CoordTuple(c[0] for c in combo), CoordTuple(c[1] for c in combo)


def _basis_witness(T: MultilinearMap, idx) -> tuple[CoordTuple, ...]:
    return tuple(CoordTuple.basis(T.dim, i) for i in idx)


def is_orthosymmetric(T: MultilinearMap, mode: Exact | Sampled = Exact()) -> Certificate:
    """Does ``T`` vanish whenever two of its arguments are disjoint?

    Exact mode reads the answer off the tensor: that holds iff every entry
    with two distinct indices is zero. A failing entry ``(i_1, ..., i_n)``
    yields the witness ``(e_{i_1}, ..., e_{i_n})``. Sampled mode evaluates
    ``T`` on random tuples with a forced disjoint pair.
    """
    zero = (0,) * T.codim
    if isinstance(mode, Exact):
        for idx, value in T.nonzero:
            if len(set(idx)) > 1:
                w = _basis_witness(T, idx)
                return Certificate("fail", w, None, T(*w), zero, T.dim**T.order)
        return Certificate("pass", trials=T.dim**T.order)
    rng = random.Random(mode.seed)
    L = PointwiseLattice(T.dim, low=-3, high=3)
    for t in range(mode.trials):
        fs = L.sample_disjoint(rng, T.order, pairwise=False)
        value = T(*fs)
        if value != zero:
            return Certificate("fail", fs, None, value, zero, t + 1, mode.seed)
    return Certificate("pass", trials=mode.trials, seed=mode.seed)


def _pairs(dim: int, mode, positive: bool):
    if isinstance(mode, Exact):
        yield from disjoint_pairs(dim, mode.bound, positive)
        return
    rng = random.Random(mode.seed)
    L = PointwiseLattice(dim, positive=positive, low=-3, high=3)
    for _ in range(mode.trials):
        yield L.sample_disjoint(rng, 2, pairwise=False)


def is_orthogonally_additive(
    P: HomogeneousPolynomial, positive_only: bool = False, mode: Exact | Sampled = Exact()
) -> Certificate:
    """Check ``P(f + g) == P(f) + P(g)`` over disjoint pairs (in ``E`` or ``E+``)."""
    count = 0
    for f, g in _pairs(P.dim, mode, positive_only):
        count += 1
        lhs = P(f + g)
        rhs = vadd(P(f), P(g))
        if lhs != rhs:
            return Certificate("fail", (f, g), None, lhs, rhs, count, getattr(mode, "seed", None))
    return Certificate("pass", trials=count, seed=getattr(mode, "seed", None))


def merge_slots(fs: Sequence[CoordTuple], i: int, j: int) -> tuple[CoordTuple, ...]:
    """Zero slot ``i`` and put ``fs[i] + fs[j]`` in slot ``j``."""
    out = list(fs)
    out[j] = fs[i] + fs[j]
    out[i] = CoordTuple.zeros(fs[i].dim)
    return tuple(out)


def is_orthogonally_steady(S: PowerSumPolynomial, mode: Exact | Sampled = Exact()) -> Certificate:
    """Check ``S(fs) == S(fs with a disjoint pair merged into one slot)``."""
    if S.r < 2:
        raise ValueError("orthogonal steadiness needs at least two variables")
    dim = S.P.dim
    seed = getattr(mode, "seed", None)
    if isinstance(mode, Exact):
        fillers = [CoordTuple.zeros(dim), CoordTuple((1,) * dim)]
        rest = list(itertools.product(fillers, repeat=S.r - 2))
        candidates = (
            ((f, g) + tail, (0, 1)) for f, g in disjoint_pairs(dim, mode.bound) for tail in rest
        )
    else:
        rng = random.Random(mode.seed)
        L = PointwiseLattice(dim, low=-3, high=3)
        candidates = ((L.sample_disjoint(rng, S.r, pairwise=False), None) for _ in range(mode.trials))
    count = 0
    for fs, pair in candidates:
        count += 1
        pairs = [pair] if pair else [
            (i, j) for i, j in itertools.permutations(range(S.r), 2)
            if (fs[i].abs() & fs[j].abs()).is_zero()
        ]
        lhs = S(*fs)
        for i, j in pairs:
            merged = merge_slots(fs, i, j)
            rhs = S(*merged)
            if lhs != rhs:
                return Certificate("fail", fs, merged, lhs, rhs, count, seed, {"pair": (i, j)})
    return Certificate("pass", trials=count, seed=seed)


def check_root_power_identity(P: HomogeneousPolynomial, fs: Sequence[CoordTuple], tol: float = 1e-9) -> bool:
    """``P(S(f_1, ..., f_r)) == P(f_1) + ... + P(f_r)`` with ``S`` the degree-n root of power sums.

    Holds for arbitrary, not necessarily disjoint, inputs once ``P`` is
    orthogonally additive; ``S`` is evaluated in floating point.
    """
    weights = P.diagonal_weights()
    if weights is None:
        raise PreconditionError("P is not orthogonally additive")
    diag = HomogeneousPolynomial.diagonal(P.degree, [tuple(float(c) for c in w) for w in weights], P.codim)
    s = apply_ph(power_root_sum(len(fs), P.degree), list(fs))
    lhs = diag(s)
    rhs = vsum((diag(CoordTuple(float(x) for x in f)) for f in fs), P.codim)
    return all(abs(a - b) <= tol for a, b in zip(lhs, rhs))


def _joint_tuples(T: MultilinearMap, mode, positive: bool):
    n, m = T.order, T.dim
    if isinstance(mode, Exact):
        vals = [0, 1] if positive else [-1, 0, 1]
        vectors = [CoordTuple(v) for v in itertools.product(vals, repeat=m)]
        if len(vectors) ** n > EXACT_BUDGET:
            raise UnsupportedError(f"{len(vectors)}^{n} tuples exceed the budget of {EXACT_BUDGET}")
        for fs in itertools.product(vectors, repeat=n):
            if all(any(f[a] == 0 for f in fs) for a in range(m)):
                yield fs
        return
    # zeroing one slot per coordinate gives the widest support the hypothesis
    # allows; further zeros only specialize those patterns
    rng = random.Random(mode.seed + (1 if positive else 0))
    vals = [1, 2, 3] if positive else [-3, -2, -1, 1, 2, 3]
    for _ in range(mode.trials):
        cols = []
        for _ in range(m):
            col = [rng.choice(vals) for _ in range(n)]
            col[rng.randrange(n)] = 0
            cols.append(col)
        yield tuple(CoordTuple(col[s] for col in cols) for s in range(n))


def joint_orthosymmetry_check(T: MultilinearMap, mode: Exact | Sampled = Exact(bound=1)) -> Certificate:
    """Does ``T`` vanish whenever the meet of the ``|f_k|`` is zero?

    Both variants are run: over ``E`` with absolute values, and over the
    positive cone. The certificate passes only if both do; ``details``
    records each variant's verdict.
    """
    zero = (0,) * T.codim
    details = {}
    failure = None
    count = 0
    for variant, positive in (("E", False), ("E+", True)):
        details[variant] = "pass"
        for fs in _joint_tuples(T, mode, positive):
            count += 1
            value = T(*fs)
            if value != zero:
                details[variant] = "fail"
                failure = failure or (fs, value)
                break
    seed = getattr(mode, "seed", None)
    if failure:
        return Certificate("fail", failure[0], None, failure[1], zero, count, seed, details)
    return Certificate("pass", trials=count, seed=seed, details=details)


def binomial_cross_terms(T: MultilinearMap, f: CoordTuple, g: CoordTuple) -> tuple[tuple, tuple]:
    """Both sides of ``P_T(f+g) - P_T(f) - P_T(g) = sum_{k=1}^{n-1} C(n,k) T(f^{n-k} g^k)``.

    The identity is the binomial expansion and needs ``T`` symmetric.
    """
    n = T.order
    P = HomogeneousPolynomial.generated(T)
    neg = tuple(-v for v in vadd(P(f), P(g)))
    lhs = vadd(P(f + g), neg)
    rhs = vsum(
        (tuple(math.comb(n, k) * v for v in T(*power_args([(f, n - k), (g, k)]))) for k in range(1, n)),
        T.codim,
    )
    return lhs, rhs
