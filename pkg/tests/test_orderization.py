import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticemed.coords import CoordTuple
from latticemed.lattice import PointwiseLattice, is_chain
from latticemed.oracles import kth_smallest_by_sorting
from latticemed.orderization import (
    MAX_COMBINATORIAL_ARITY,
    DistributivityError,
    dual_form,
    m_k,
    m_k_pointwise,
    median3,
    orderize_finite,
    primal_form,
    total_orderization,
    total_orderization_pointwise,
)
from latticemed.posets import chain_lattice, corpus, diamond_m3, pentagon_n5

P1 = PointwiseLattice(1)
P2 = PointwiseLattice(2)
P3 = PointwiseLattice(3)


def r(*xs):
    return [CoordTuple((x,)) for x in xs]


def test_median_reals():
    assert median3(P1, *r(1, 2, 3)) == CoordTuple((2,))
    assert median3(P1, *r(2, 2, 5)) == CoordTuple((2,))


def test_median_tuples():
    xs = [CoordTuple((1, 5)), CoordTuple((2, 4)), CoordTuple((3, 3))]
    expected = CoordTuple(kth_smallest_by_sorting(col, 2) for col in zip(*xs))
    assert expected == CoordTuple((2, 4))
    assert median3(P2, *xs) == expected


def test_median_refuses_non_distributive():
    with pytest.raises(DistributivityError) as err:
        median3(diamond_m3(), 1, 2, 3)
    assert err.value.witness is not None


def test_m_k_on_chain_returns_kth():
    L = chain_lattice(4)
    assert m_k(L, [0, 1, 2], 2) == 1
    for xs in itertools.combinations(range(4), 3):
        for k in (1, 2, 3):
            assert m_k(L, list(xs), k) == xs[k - 1]


def test_m_k_n2_is_meet_and_join():
    f, g = CoordTuple((1, 4)), CoordTuple((3, 2))
    assert m_k(P2, [f, g], 1) == f & g
    assert m_k(P2, [f, g], 2) == f | g


def test_m_k_pointwise_tuples():
    fs = [CoordTuple((3, 1, 2)), CoordTuple((1, 3, 2)), CoordTuple((2, 2, 2))]
    oracle = [CoordTuple(kth_smallest_by_sorting(c, k) for c in zip(*fs)) for k in (1, 2, 3)]
    assert oracle[1] == CoordTuple((2, 2, 2))
    assert oracle[0] == CoordTuple((1, 1, 2))
    assert m_k(P3, fs, 2) == oracle[1]
    assert m_k_pointwise(fs, 2) == oracle[1]
    assert m_k_pointwise(fs, 1) == oracle[0]
    assert m_k_pointwise(fs, 3) == fs[0] | fs[1] | fs[2]
    assert m_k_pointwise(fs[:1], 1) == fs[0]


def test_m_k_errors():
    with pytest.raises(ValueError):
        m_k(P1, r(1, 2), 3)
    with pytest.raises(ValueError):
        m_k(P1, r(1, 2), 0)
    with pytest.raises(ValueError):
        m_k(P1, r(*range(MAX_COMBINATORIAL_ARITY + 1)), 1)
    with pytest.raises(ValueError):
        m_k_pointwise([CoordTuple((1,)), CoordTuple((1, 2))], 1)
    with pytest.raises(DistributivityError):
        m_k(pentagon_n5(), [1, 2, 3], 2)


def test_total_orderization_examples():
    assert total_orderization(P2, [CoordTuple((1, 0)), CoordTuple((0, 1))]).values == (
        CoordTuple((0, 0)),
        CoordTuple((1, 1)),
    )
    chain = [CoordTuple((2, 2)), CoordTuple((3, 3))]
    assert total_orderization(P2, chain).values == tuple(chain)
    fs = [CoordTuple((3, 1)), CoordTuple((1, 3)), CoordTuple((2, 2))]
    to = total_orderization(P2, fs, check_dual=True)
    assert to.values == (CoordTuple((1, 1)), CoordTuple((2, 2)), CoordTuple((3, 3)))
    assert to.source == tuple(fs)
    assert len(to) == 3


def test_literal_dual_form_differs_when_k_not_middle():
    # meet over (n+1-k)-subsets of joins computes M_{n+1-k}, so it only
    # matches M_k when k = n+1-k
    fs = [CoordTuple((3, 1)), CoordTuple((1, 3)), CoordTuple((2, 2))]
    for k in (1, 2, 3):
        literal = P2.meet_all(P2.join_all(c) for c in itertools.combinations(fs, 3 + 1 - k))
        assert (literal == m_k(P2, fs, k)) == (k == 2)
        assert dual_form(P2, fs, k) == primal_form(P2, fs, k)


@settings(max_examples=60)
@given(
    st.integers(1, 8).flatmap(
        lambda n: st.integers(1, 10).flatmap(
            lambda m: st.lists(st.lists(st.integers(-9, 9), min_size=m, max_size=m), min_size=n, max_size=n)
        )
    ),
    st.data(),
)
def test_pointwise_fast_path_matches_combinatorial(rows, data):
    fs = [CoordTuple(row) for row in rows]
    k = data.draw(st.integers(1, len(fs)))
    L = PointwiseLattice(fs[0].dim)
    assert m_k_pointwise(fs, k) == m_k(L, fs, k, check_dual=True)
    assert total_orderization_pointwise(fs)[k - 1] == m_k_pointwise(fs, k)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=5), st.randoms())
def test_symmetric_chain_idempotent(rows, rnd):
    fs = [CoordTuple(row) for row in rows]
    to = total_orderization(P3, fs, check_dual=True).values
    shuffled = list(fs)
    rnd.shuffle(shuffled)
    assert total_orderization(P3, shuffled).values == to
    assert is_chain(P3, to)
    assert all(P3.leq(a, b) for a, b in zip(to, to[1:]))
    assert total_orderization(P3, list(to)).values == to


def test_symmetry_all_permutations_on_corpus_n4():
    rng = random.Random(3)
    for _, L in corpus(3):
        for _ in range(20):
            xs = tuple(rng.randrange(L.size) for _ in range(4))
            t = orderize_finite(L, xs)
            for perm in itertools.permutations(xs):
                assert orderize_finite(L, perm) == t
            assert t == total_orderization(L, xs).values


def test_orderize_finite_catches_non_distributive():
    L = diamond_m3()
    with pytest.raises(DistributivityError):
        for xs in itertools.product(L.elements, repeat=3):
            orderize_finite(L, xs)


def test_exact_rationals_preserved():
    fs = [CoordTuple((Fraction(1, 2), 3)), CoordTuple((Fraction(1, 3), -1))]
    to = total_orderization_pointwise(fs)
    assert to[0] == CoordTuple((Fraction(1, 3), -1))
    assert to[0].exact
