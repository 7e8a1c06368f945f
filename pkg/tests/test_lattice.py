import itertools
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latticemed.coords import CoordTuple
from latticemed.lattice import (
    EXHAUSTIVE,
    LAWS,
    FiniteLattice,
    LatticeDomainError,
    PointwiseLattice,
    Sampled,
    UnsupportedError,
    is_chain,
    leq,
    verify_lattice_laws,
)
from latticemed.posets import FinitePoset, corpus, diamond_m3, downset_lattice, pentagon_n5


@pytest.fixture
def boolean4():
    return downset_lattice(FinitePoset.antichain(2))


def test_leq_bottom_below_top(boolean4):
    assert leq(boolean4, boolean4.bottom, boolean4.top)
    assert not leq(boolean4, boolean4.top, boolean4.bottom)


def test_leq_reflexive(boolean4):
    for a in boolean4.elements:
        assert leq(boolean4, a, a)


def test_leq_incomparable_tuples():
    L = PointwiseLattice(2)
    a, b = CoordTuple((1, 3)), CoordTuple((2, 2))
    assert not leq(L, a, b)
    assert not leq(L, b, a)


def test_leq_foreign_element_rejected(boolean4):
    with pytest.raises(LatticeDomainError):
        leq(boolean4, 0, 17)
    with pytest.raises(LatticeDomainError):
        leq(PointwiseLattice(2), CoordTuple((1, 2, 3)), CoordTuple((1, 2)))


def test_is_chain_examples():
    L = PointwiseLattice(2)
    assert is_chain(L, [CoordTuple((1, 1)), CoordTuple((2, 2)), CoordTuple((3, 3))])
    assert not is_chain(L, [CoordTuple((1, 0)), CoordTuple((0, 1))])
    assert is_chain(L, [CoordTuple((5, -2))])
    assert is_chain(L, [])


def test_downset_lattices_pass_all_laws():
    for _, L in corpus(4):
        report = verify_lattice_laws(L, EXHAUSTIVE)
        assert report.passed, report.failures()
        assert report.checked == L.size**3


def test_m3_fails_only_distributivity():
    report = verify_lattice_laws(diamond_m3(), EXHAUSTIVE)
    assert report.failures() == ["distributivity"]
    a, b, c = report.witnesses["distributivity"]
    L = diamond_m3()
    assert L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)) or L.join(a, L.meet(b, c)) != L.meet(
        L.join(a, b), L.join(a, c)
    )


def test_n5_not_distributive():
    L = pentagon_n5()
    assert not L.is_distributive
    assert verify_lattice_laws(L, EXHAUSTIVE).failures() == ["distributivity"]


def test_pointwise_sampled_laws_pass():
    report = verify_lattice_laws(PointwiseLattice(3), Sampled(1000, 7))
    assert report.passed
    assert set(report.results) == set(LAWS)


def test_pointwise_exhaustive_unsupported():
    with pytest.raises(UnsupportedError):
        verify_lattice_laws(PointwiseLattice(2), EXHAUSTIVE)


def test_sampled_on_finite_carrier_allowed(boolean4):
    assert verify_lattice_laws(boolean4, Sampled(50, 1)).passed


def test_leq_is_partial_order_on_corpus():
    for _, L in corpus(3):
        le = [[leq(L, a, b) for b in L.elements] for a in L.elements]
        for a, b, c in itertools.product(L.elements, repeat=3):
            if le[a][b] and le[b][a]:
                assert a == b
            if le[a][b] and le[b][c]:
                assert le[a][c]
        # order agrees with the join characterization
        for a, b in itertools.product(L.elements, repeat=2):
            assert le[a][b] == (L.join(a, b) == b)


def test_bottom_absorbs(boolean4):
    assert all(boolean4.meet(boolean4.bottom, a) == boolean4.bottom for a in boolean4.elements)


def test_finite_lattice_json_round_trip():
    for _, L in corpus(3):
        data = json.loads(L.dumps())
        assert set(data) == {"elements", "meet", "join", "bottom", "top"}
        assert FiniteLattice.from_json(data) == L


def test_bad_tables_rejected():
    with pytest.raises(ValueError):
        FiniteLattice(["a", "b"], [[0, 0]], [[0, 1], [1, 1]])
    with pytest.raises(ValueError):
        FiniteLattice(["a", "b"], [[0, 0], [0, 2]], [[0, 1], [1, 1]])


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3), st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_pointwise_absorption(a, b):
    f, g = CoordTuple(a), CoordTuple(b)
    assert f & (f | g) == f
    assert f | (f & g) == f
