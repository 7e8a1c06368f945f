"""Symbolic lattice terms and their canonical monotone normal forms.

A term over variables ``x1..xv`` denotes an element of the free
distributive lattice on v generators. Its normal form is the antichain of
minimal variable sets in its join-of-meets expansion; two terms are equal
in every distributive lattice iff their normal forms coincide.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Mapping, Sequence, Union

from latticemed.lattice import DistributiveLattice


class BindingError(LookupError):
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Meet:
    children: tuple

    def __post_init__(self):
        if not self.children:
            raise ValueError("meet needs at least one child")


@dataclass(frozen=True)
class Join:
    children: tuple

    def __post_init__(self):
        if not self.children:
            raise ValueError("join needs at least one child")


LatticeTerm = Union[Var, Meet, Join]


def var(i: int) -> Var:
    return Var(f"x{i}")


def meet(*children) -> LatticeTerm:
    return children[0] if len(children) == 1 else Meet(tuple(children))


def join(*children) -> LatticeTerm:
    return children[0] if len(children) == 1 else Join(tuple(children))


def mk_term(k: int, args: Sequence[LatticeTerm]) -> LatticeTerm:
    """M_k as a join over (n+1-k)-subsets of meets."""
    n = len(args)
    if not 1 <= k <= n:
        raise ValueError(f"M{k} needs k in [1, {n}]")
    return join(*(meet(*c) for c in itertools.combinations(args, n + 1 - k)))


def mk_dual_term(k: int, args: Sequence[LatticeTerm]) -> LatticeTerm:
    """M_k as a meet over k-subsets of joins."""
    n = len(args)
    if not 1 <= k <= n:
        raise ValueError(f"M{k} needs k in [1, {n}]")
    return meet(*(join(*c) for c in itertools.combinations(args, k)))


def median_term(a: LatticeTerm, b: LatticeTerm, c: LatticeTerm) -> LatticeTerm:
    return mk_term(2, (a, b, c))


def variables(t: LatticeTerm) -> list[str]:
    """Variable names in order of first appearance."""
    seen: dict[str, None] = {}

    def walk(u):
        if isinstance(u, Var):
            seen.setdefault(u.name)
        else:
            for c in u.children:
                walk(c)

    walk(t)
    return list(seen)


def rename(t: LatticeTerm, mapping: Mapping[str, str]) -> LatticeTerm:
    if isinstance(t, Var):
        return Var(mapping.get(t.name, t.name))
    return type(t)(tuple(rename(c, mapping) for c in t.children))


def term_eval(t: LatticeTerm, binding: Mapping[str, object], L: DistributiveLattice):
    if isinstance(t, Var):
        try:
            return binding[t.name]
        except KeyError:
            raise BindingError(f"variable {t.name!r} is unbound") from None
    vals = [term_eval(c, binding, L) for c in t.children]
    return L.meet_all(vals) if isinstance(t, Meet) else L.join_all(vals)


def _minimize(sets) -> tuple[int, ...]:
    """Drop every set that contains another; canonical (size, lexicographic) order."""
    out: list[int] = []
    for s in sorted(set(sets), key=lambda m: (bin(m).count("1"), _bits(m))):
        if not any(t & s == t for t in out):
            out.append(s)
    return tuple(out)


def _bits(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class MonotoneNormalForm:
    """Antichain of variable sets (bitmasks over ``variables``)."""

    variables: tuple[str, ...]
    clauses: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.clauses:
            raise ValueError("empty antichain denotes a constant")
        if _minimize(self.clauses) != self.clauses:
            raise ValueError("clauses are not a canonical antichain")

    def sets(self) -> list[frozenset[str]]:
        return [frozenset(self.variables[i] for i in _bits(c)) for c in self.clauses]

    def __str__(self) -> str:
        inner = ",".join("{" + ",".join(self.variables[i] for i in _bits(c)) + "}" for c in self.clauses)
        return "{" + inner + "}"

    def __and__(self, other: "MonotoneNormalForm") -> "MonotoneNormalForm":
        self._same(other)
        return MonotoneNormalForm(self.variables, _minimize(a | b for a in self.clauses for b in other.clauses))

    def __or__(self, other: "MonotoneNormalForm") -> "MonotoneNormalForm":
        self._same(other)
        return MonotoneNormalForm(self.variables, _minimize(self.clauses + other.clauses))

    def _same(self, other):
        if self.variables != other.variables:
            raise ValueError("normal forms over different variable lists")

    def evaluate_bits(self, assignment: int) -> bool:
        """Value on the 2-element chain; bit i of ``assignment`` is variable i."""
        return any(c & assignment == c for c in self.clauses)

    def truth_table(self) -> tuple[bool, ...]:
        return tuple(self.evaluate_bits(a) for a in range(1 << len(self.variables)))


def _variable_list(v: int | Sequence[str]) -> tuple[str, ...]:
    if isinstance(v, int):
        return tuple(f"x{i}" for i in range(1, v + 1))
    return tuple(v)


def term_normal_form(t: LatticeTerm, v: int | Sequence[str]) -> MonotoneNormalForm:
    """Canonical form of ``t``; ``v`` is a variable count (``x1..xv``) or an explicit name list."""
    names = _variable_list(v)
    pos = {name: i for i, name in enumerate(names)}

    def walk(u) -> tuple[int, ...]:
        if isinstance(u, Var):
            if u.name not in pos:
                raise BindingError(f"variable {u.name!r} not among {names}")
            return (1 << pos[u.name],)
        parts = [walk(c) for c in u.children]
        if isinstance(u, Join):
            return _minimize(itertools.chain.from_iterable(parts))
        acc = parts[0]
        for p in parts[1:]:
            acc = _minimize(a | b for a in acc for b in p)
        return acc

    return MonotoneNormalForm(names, walk(t))


def free_dl_count(v: int) -> int:
    """Size of the free distributive lattice on v generators (no constants).

    Computed by closing the generators under meet and join of normal
    forms until nothing new appears.
    """
    if not 1 <= v <= 4:
        raise ValueError("free_dl_count supports 1 <= v <= 4")
    names = _variable_list(v)
    elems = {MonotoneNormalForm(names, (1 << i,)) for i in range(v)}
    frontier = set(elems)
    while frontier:
        new = set()
        for a in frontier:
            for b in elems | frontier:
                for c in (a & b, a | b):
                    if c not in elems:
                        new.add(c)
        elems |= new
        frontier = new
    return len(elems)


@dataclass
class SymbolicReport:
    n: int
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def verify_mk_symbolic(n: int) -> SymbolicReport:
    """Check the M_k identities as equalities of normal forms on n variables.

    * ``symmetry``: M_k is unchanged by every permutation of its arguments.
    * ``primal-dual``: join-of-meets and meet-of-joins forms coincide.
    * ``chain``: M_k & M_{k+1} == M_k.
    * ``shape``: the normal form of M_k is all (n+1-k)-subsets.
    """
    if not 2 <= n <= 4:
        raise ValueError("verify_mk_symbolic supports 2 <= n <= 4")
    xs = [var(i) for i in range(1, n + 1)]
    report = SymbolicReport(n=n, checks={"symmetry": True, "primal-dual": True, "chain": True, "shape": True})

    def fail(check, msg):
        report.checks[check] = False
        report.failures.append(msg)

    nfs = {}
    for k in range(1, n + 1):
        nf = term_normal_form(mk_term(k, xs), n)
        nfs[k] = nf
        if len(nf.clauses) != comb(n, n + 1 - k) or any(bin(c).count("1") != n + 1 - k for c in nf.clauses):
            fail("shape", f"M{k}: unexpected normal form {nf}")
        for perm in itertools.permutations(range(n)):
            permuted = mk_term(k, [xs[i] for i in perm])
            if term_normal_form(permuted, n) != nf:
                fail("symmetry", f"M{k} changes under permutation {perm}")
                break
        if term_normal_form(mk_dual_term(k, xs), n) != nf:
            fail("primal-dual", f"M{k}: primal and dual forms differ")
    for k in range(1, n):
        if nfs[k] & nfs[k + 1] != nfs[k]:
            fail("chain", f"M{k} is not below M{k + 1}")
    return report
