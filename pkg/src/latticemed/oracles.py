"""Brute-force reference computations.

These deliberately share no code path with the routines they check:
monotone functions are found by scanning truth tables, posets by scanning
upper-triangular relations with pairwise isomorphism tests, and order
statistics by sorting.
"""

from __future__ import annotations

import itertools
from typing import Sequence


def count_monotone_functions(v: int) -> int:
    """Number of monotone boolean functions of v inputs, by truth-table scan."""
    points = range(1 << v)
    # pairs (a, b) with a <= b differing in a single bit suffice for monotonicity
    edges = [(a, a | (1 << i)) for a in points for i in range(v) if not a >> i & 1]
    count = 0
    for table in range(1 << (1 << v)):
        if all(not (table >> a & 1) or table >> b & 1 for a, b in edges):
            count += 1
    return count


def free_dl_count_bruteforce(v: int) -> int:
    """Nonconstant monotone boolean functions of v inputs."""
    return count_monotone_functions(v) - 2


def _is_transitive(rel: set[tuple[int, int]]) -> bool:
    return all((a, d) in rel for a, b in rel for c, d in rel if b == c)


def _isomorphic(p: int, r1: frozenset, r2: frozenset) -> bool:
    if len(r1) != len(r2):
        return False
    for perm in itertools.permutations(range(p)):
        if all((perm[a], perm[b]) in r2 for a, b in r1):
            return True
    return False


def posets_naive(p: int) -> list[frozenset]:
    """Strict order relations on p points, one per isomorphism class.

    Every poset has a natural labeling, so it suffices to scan relations
    contained in ``{(i, j): i < j}``.
    """
    slots = list(itertools.combinations(range(p), 2))
    reps: list[frozenset] = []
    for bits in range(1 << len(slots)):
        rel = {slots[s] for s in range(len(slots)) if bits >> s & 1}
        if not _is_transitive(rel):
            continue
        rel = frozenset(rel)
        if not any(_isomorphic(p, rel, r) for r in reps):
            reps.append(rel)
    return reps


def downsets_naive(p: int, strict: frozenset) -> list[frozenset]:
    out = []
    for bits in range(1 << p):
        s = {i for i in range(p) if bits >> i & 1}
        if all(a in s for a, b in strict if b in s):
            out.append(frozenset(s))
    return out


def kth_smallest_by_sorting(values: Sequence, k: int):
    return sorted(values)[k - 1]


def vanishes_on_disjoint_tuples(T, bound: int) -> tuple | None:
    """Scan every argument tuple of ``T`` with integer coordinates in
    ``[-bound, bound]`` that contains a disjoint pair; return the first one
    where ``T`` is nonzero, or None."""
    vectors = list(itertools.product(range(-bound, bound + 1), repeat=T.dim))
    zero = (0,) * T.codim
    for fs in itertools.product(vectors, repeat=T.order):
        has_pair = any(
            all(a == 0 or b == 0 for a, b in zip(fs[i], fs[j]))
            for i, j in itertools.combinations(range(T.order), 2)
        )
        if not has_pair:
            continue
        value = [0] * T.codim
        for idx in itertools.product(range(T.dim), repeat=T.order):
            coef = 1
            for f, i in zip(fs, idx):
                coef *= f[i]
            if coef:
                entry = T.entry(idx)
                value = [v + coef * e for v, e in zip(value, entry)]
        if tuple(value) != zero:
            return fs
    return None
