"""Small posets up to isomorphism and their lattices of downsets.

Every finite distributive lattice is the downset lattice of its poset of
join-irreducibles, so the downset lattices of all posets with at most p
elements form a complete corpus of distributive lattices of that kind.
Downsets are bitmasks over the poset elements; meet is ``&`` and join is
``|``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Sequence

from latticemed.lattice import FiniteLattice, UnsupportedError

MAX_POSET_SIZE = 6


@dataclass(frozen=True)
class FinitePoset:
    """``rows[i]`` has bit ``j`` set iff ``i <= j``."""

    size: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.size:
            raise ValueError("need one row per element")
        for i in range(self.size):
            if not self.le(i, i):
                raise ValueError(f"not reflexive at {i}")
            for j in range(self.size):
                if i != j and self.le(i, j) and self.le(j, i):
                    raise ValueError(f"not antisymmetric at {i}, {j}")
                if self.le(i, j) and self.rows[j] & ~self.rows[i]:
                    raise ValueError(f"not transitive through {i} <= {j}")

    def le(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    @classmethod
    def from_covers(cls, size: int, covers: Sequence[Sequence[int]]) -> "FinitePoset":
        """Build from cover pairs ``(i, j)`` meaning ``i < j``; takes the transitive closure."""
        rows = [1 << i for i in range(size)]
        for i, j in covers:
            rows[i] |= 1 << j
        changed = True
        while changed:
            changed = False
            for i in range(size):
                acc = rows[i]
                for j in range(size):
                    if rows[i] >> j & 1:
                        acc |= rows[j]
                if acc != rows[i]:
                    rows[i] = acc
                    changed = True
        return cls(size, tuple(rows))

    @classmethod
    def chain(cls, size: int) -> "FinitePoset":
        return cls.from_covers(size, [(i, i + 1) for i in range(size - 1)])

    @classmethod
    def antichain(cls, size: int) -> "FinitePoset":
        return cls(size, tuple(1 << i for i in range(size)))

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for i, j in itertools.permutations(range(self.size), 2):
            if self.le(i, j) and not any(
                k not in (i, j) and self.le(i, k) and self.le(k, j) for k in range(self.size)
            ):
                out.append((i, j))
        return sorted(out)

    def down_mask(self, i: int) -> int:
        return sum(1 << j for j in range(self.size) if self.le(j, i))

    def relabel(self, order: Sequence[int]) -> "FinitePoset":
        """New element ``a`` is old element ``order[a]``."""
        pos = {old: new for new, old in enumerate(order)}
        rows = []
        for old in order:
            rows.append(sum(1 << pos[j] for j in range(self.size) if self.le(old, j)))
        return FinitePoset(self.size, tuple(rows))

    def to_json(self) -> dict:
        return {"size": self.size, "covers": [list(c) for c in self.covers()]}

    @classmethod
    def from_json(cls, data: dict) -> "FinitePoset":
        return cls.from_covers(data["size"], data["covers"])


def canonical_key(P: FinitePoset) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Isomorphism-invariant key: minimal relation matrix over admissible relabelings.

    A relabeling is admissible when it lists elements in nondecreasing
    order of (down-set size, up-set size). Isomorphisms preserve those
    sizes, so the minimum over admissible relabelings is the same for
    isomorphic posets, while the search stays far below ``p!``.
    """
    p = P.size
    sig = [
        (sum(P.le(j, i) for j in range(p)), sum(P.le(i, j) for j in range(p)))
        for i in range(p)
    ]
    classes = [
        [i for i in range(p) if sig[i] == s] for s in sorted(set(sig))
    ]
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [i for part in parts for i in part]
        key = tuple(
            sum(1 << b for b in range(p) if P.le(order[a], order[b])) for a in range(p)
        )
        if best is None or key < best:
            best = key
    return (tuple(sorted(sig)), best or ())


def _from_key(p: int, key) -> FinitePoset:
    return FinitePoset(p, key[1])


def downsets(P: FinitePoset) -> list[int]:
    """All down-closed subsets as bitmasks, sorted by (size, mask)."""
    downs = [P.down_mask(i) for i in range(P.size)]
    out = []
    for mask in range(1 << P.size):
        if all(downs[i] & ~mask == 0 for i in range(P.size) if mask >> i & 1):
            out.append(mask)
    return sorted(out, key=lambda m: (bin(m).count("1"), m))


def enumerate_posets(p: int) -> list[FinitePoset]:
    """One representative per isomorphism class of p-element posets.

    Built incrementally: every poset arises from a smaller one by adding a
    new maximal element whose strict downset is a downset of the smaller
    poset. Results are sorted by canonical key.
    """
    if p < 0:
        raise ValueError("size must be nonnegative")
    if p > MAX_POSET_SIZE:
        raise UnsupportedError(f"poset enumeration is capped at {MAX_POSET_SIZE} elements")
    level = {canonical_key(FinitePoset(0, ())): FinitePoset(0, ())}
    for size in range(1, p + 1):
        nxt = {}
        for P in level.values():
            for down in downsets(P):
                rows = [r | (1 << (size - 1)) if down >> i & 1 else r for i, r in enumerate(P.rows)]
                rows.append(1 << (size - 1))
                Q = FinitePoset(size, tuple(rows))
                key = canonical_key(Q)
                if key not in nxt:
                    nxt[key] = _from_key(size, key)
        level = nxt
    return [level[k] for k in sorted(level)]


def _downset_name(mask: int, size: int) -> str:
    letters = [chr(ord("a") + i) for i in range(size) if mask >> i & 1]
    return "{" + ",".join(letters) + "}"


class DownsetLattice(FiniteLattice):
    """Downsets of a poset; element ``i`` is the bitmask ``masks[i]``."""

    def __init__(self, poset: FinitePoset, masks: Sequence[int]):
        self.poset = poset
        self.masks = tuple(masks)
        index = {m: i for i, m in enumerate(self.masks)}
        meet = [[index[a & b] for b in self.masks] for a in self.masks]
        join = [[index[a | b] for b in self.masks] for a in self.masks]
        full = (1 << poset.size) - 1
        super().__init__(
            [_downset_name(m, poset.size) for m in self.masks],
            meet,
            join,
            bottom=index[0],
            top=index[full],
        )

    def __repr__(self) -> str:
        return f"DownsetLattice(size={self.size}, poset_size={self.poset.size})"


def downset_lattice(P: FinitePoset) -> DownsetLattice:
    return DownsetLattice(P, downsets(P))


def corpus(max_size: int) -> list[tuple[FinitePoset, DownsetLattice]]:
    """Every poset with at most ``max_size`` elements with its downset lattice."""
    return [(P, downset_lattice(P)) for p in range(max_size + 1) for P in enumerate_posets(p)]


def corpus_json(max_size: int) -> str:
    """Canonical corpus export: sorted keys, two-space indent, trailing LF."""
    data = []
    for P, L in corpus(max_size):
        entry = P.to_json()
        entry["lattice"] = L.to_json()
        data.append(entry)
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def load_corpus(text: str) -> list[tuple[FinitePoset, FiniteLattice]]:
    return [(FinitePoset.from_json(e), FiniteLattice.from_json(e["lattice"])) for e in json.loads(text)]


def lattice_from_order(names: Sequence[str], le: Sequence[Sequence[bool]]) -> FiniteLattice:
    """Meet/join tables of a finite lattice given by its order matrix.

    Raises ``ValueError`` when some pair lacks a greatest lower or least
    upper bound.
    """
    n = len(names)
    rng = range(n)

    def bound(a, b, lower):
        cands = [c for c in rng if (le[c][a] and le[c][b] if lower else le[a][c] and le[b][c])]
        best = [c for c in cands if all((le[d][c] if lower else le[c][d]) for d in cands)]
        if len(best) != 1:
            raise ValueError(f"{names[a]}, {names[b]} have no {'meet' if lower else 'join'}")
        return best[0]

    meet = [[bound(a, b, True) for b in rng] for a in rng]
    join = [[bound(a, b, False) for b in rng] for a in rng]
    bottoms = [c for c in rng if all(le[c][d] for d in rng)]
    tops = [c for c in rng if all(le[d][c] for d in rng)]
    return FiniteLattice(names, meet, join, bottoms[0] if bottoms else None, tops[0] if tops else None)


def _order(n: int, pairs) -> list[list[bool]]:
    le = [[i == j for j in range(n)] for i in range(n)]
    for i, j in pairs:
        le[i][j] = True
    return le


def diamond_m3() -> FiniteLattice:
    """Modular, non-distributive: 0 < a, b, c < 1."""
    names = ["0", "a", "b", "c", "1"]
    pairs = [(0, i) for i in range(1, 5)] + [(i, 4) for i in (1, 2, 3)]
    return lattice_from_order(names, _order(5, pairs))


def pentagon_n5() -> FiniteLattice:
    """Non-modular: 0 < a < b < 1 and 0 < c < 1."""
    names = ["0", "a", "b", "c", "1"]
    pairs = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 4), (3, 4)]
    return lattice_from_order(names, _order(5, pairs))


def chain_lattice(length: int) -> FiniteLattice:
    names = [str(i) for i in range(length)]
    return lattice_from_order(names, [[i <= j for j in range(length)] for i in range(length)])
