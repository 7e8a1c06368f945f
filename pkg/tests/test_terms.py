import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticemed.coords import CoordTuple
from latticemed.lattice import PointwiseLattice
from latticemed.oracles import count_monotone_functions, free_dl_count_bruteforce
from latticemed.posets import corpus
from latticemed.terms import (
    BindingError,
    Join,
    Meet,
    MonotoneNormalForm,
    Var,
    free_dl_count,
    join,
    meet,
    median_term,
    mk_dual_term,
    mk_term,
    term_eval,
    term_normal_form,
    var,
    variables,
    verify_mk_symbolic,
)

a, b, c = Var("a"), Var("b"), Var("c")
R1 = PointwiseLattice(1)


def test_term_eval_basics():
    x, y = CoordTuple((4,)), CoordTuple((9,))
    assert term_eval(a, {"a": x}, R1) == x
    assert term_eval(meet(a, join(a, b)), {"a": x, "b": y}, R1) == x
    vals = {"a": CoordTuple((3,)), "b": CoordTuple((1,)), "c": CoordTuple((2,))}
    assert term_eval(median_term(a, b, c), vals, R1) == CoordTuple((2,))


def test_unbound_variable():
    with pytest.raises(BindingError):
        term_eval(meet(a, b), {"a": CoordTuple((1,))}, R1)


def test_normal_form_examples():
    assert str(term_normal_form(median_term(a, b, c), ["a", "b", "c"])) == "{{a,b},{a,c},{b,c}}"
    assert str(term_normal_form(meet(a, join(a, b)), ["a", "b"])) == "{{a}}"
    assert str(term_normal_form(mk_term(1, [a, b, c]), ["a", "b", "c"])) == "{{a,b,c}}"


def test_normal_form_rejects_non_antichain():
    with pytest.raises(ValueError):
        MonotoneNormalForm(("a", "b"), (0b01, 0b11))
    with pytest.raises(ValueError):
        MonotoneNormalForm(("a",), ())


def test_free_dl_counts():
    assert [free_dl_count(v) for v in (1, 2, 3)] == [1, 4, 18]
    assert count_monotone_functions(3) == 20
    for v in (1, 2, 3, 4):
        assert free_dl_count(v) == free_dl_count_bruteforce(v)
    with pytest.raises(ValueError):
        free_dl_count(5)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_verify_mk_symbolic(n):
    report = verify_mk_symbolic(n)
    assert report.passed, report.failures
    assert set(report.checks) == {"symmetry", "primal-dual", "chain", "shape"}


def test_dual_term_normal_form_matches():
    xs = [var(i) for i in range(1, 4)]
    assert term_normal_form(mk_term(2, xs), 3) == term_normal_form(mk_dual_term(2, xs), 3)


def terms(names):
    leaf = st.sampled_from([Var(n) for n in names])
    return st.recursive(
        leaf,
        lambda kids: st.one_of(
            st.lists(kids, min_size=2, max_size=3).map(lambda cs: Meet(tuple(cs))),
            st.lists(kids, min_size=2, max_size=3).map(lambda cs: Join(tuple(cs))),
        ),
        max_leaves=8,
    )


NAMES = ["x1", "x2", "x3", "x4"]


def truth_table(t):
    """Evaluate on every 0/1 assignment via the 1-dimensional pointwise lattice."""
    out = []
    for bits in range(16):
        binding = {n: CoordTuple((bits >> i & 1,)) for i, n in enumerate(NAMES)}
        out.append(term_eval(t, binding, R1)[0])
    return tuple(out)


@settings(max_examples=150)
@given(terms(NAMES), terms(NAMES))
def test_normal_form_soundness(s, t):
    same_nf = term_normal_form(s, NAMES) == term_normal_form(t, NAMES)
    assert same_nf == (truth_table(s) == truth_table(t))
    assert term_normal_form(s, NAMES).truth_table() == tuple(bool(v) for v in truth_table(s))


@settings(max_examples=40)
@given(terms(["x1", "x2", "x3"]), st.data())
def test_normal_form_value_on_corpus_lattice(t, data):
    # equal normal forms mean equal values in every distributive lattice
    lattices = [L for _, L in corpus(3)]
    L = data.draw(st.sampled_from(lattices))
    binding = {n: data.draw(st.integers(0, L.size - 1)) for n in ["x1", "x2", "x3"]}
    nf = term_normal_form(t, ["x1", "x2", "x3"])
    rebuilt = join(*(meet(*(Var(v) for v in sorted(s))) for s in nf.sets()))
    assert term_eval(t, binding, L) == term_eval(rebuilt, binding, L)


def test_variables_first_appearance():
    assert variables(join(meet(b, a), c, a)) == ["b", "a", "c"]


def test_mk_term_range():
    with pytest.raises(ValueError):
        mk_term(4, [a, b, c])
    for k, n in itertools.product(range(1, 4), [3]):
        nf = term_normal_form(mk_term(k, [a, b, c]), ["a", "b", "c"])
        assert all(len(s) == n + 1 - k for s in nf.sets())
