import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from latticemed.cli import TermSyntaxError, format_term, main, parse_term
from latticemed.posets import corpus, load_corpus
from latticemed.terms import Join, Meet, Var, median_term, term_normal_form


def test_parse_median():
    t = parse_term("med(a,b,c)")
    assert t == median_term(Var("a"), Var("b"), Var("c"))
    assert str(term_normal_form(t, ["a", "b", "c"])) == "{{a,b},{a,c},{b,c}}"


def test_parse_precedence():
    assert parse_term("a & (b | c)") == Meet((Var("a"), Join((Var("b"), Var("c")))))
    assert parse_term("a & b | c") == Join((Meet((Var("a"), Var("b"))), Var("c")))


def test_keywords_only_before_paren():
    assert parse_term("med & M2") == Meet((Var("med"), Var("M2")))


def test_syntax_error_offset():
    with pytest.raises(TermSyntaxError) as err:
        parse_term("M2(a,b")
    assert err.value.offset == 7
    with pytest.raises(TermSyntaxError):
        parse_term("a & ")
    with pytest.raises(TermSyntaxError):
        parse_term("a $ b")


def test_mk_range_error():
    with pytest.raises(TermSyntaxError):
        parse_term("M4(a,b,c)")
    with pytest.raises(TermSyntaxError):
        parse_term("med(a,b)")


idents = st.from_regex(r"[a-z][a-z0-9_]{0,3}", fullmatch=True)
asts = st.recursive(
    idents.map(Var),
    lambda kids: st.one_of(
        st.lists(kids, min_size=2, max_size=3).map(lambda cs: Meet(tuple(cs))),
        st.lists(kids, min_size=2, max_size=3).map(lambda cs: Join(tuple(cs))),
    ),
    max_leaves=10,
)


@given(asts)
def test_print_parse_round_trip(t):
    assert parse_term(format_term(t)) == t


@pytest.fixture
def vectors(tmp_path):
    p = tmp_path / "f.json"
    p.write_text(json.dumps({"a": [3, 1], "b": [1, 3], "c": [2, 2]}))
    return str(p)


def test_eval_vectors(vectors, capsys):
    assert main(["eval", "--expr", "M2(a,b,c)", "--vectors", vectors]) == 0
    assert capsys.readouterr().out.strip() == "(2, 2)"


def test_orderize(vectors, capsys):
    assert main(["orderize", "--vectors", vectors]) == 0
    assert capsys.readouterr().out.split("\n")[:3] == ["M1 = (1, 1)", "M2 = (2, 2)", "M3 = (3, 3)"]
    assert main(["orderize", "--vectors", vectors, "--k", "1"]) == 0
    assert capsys.readouterr().out.strip() == "(1, 1)"
    assert main(["orderize", "--vectors", vectors, "--k", "4"]) == 2


def test_gen_round_trip(tmp_path):
    out = tmp_path / "corpus.json"
    assert main(["gen", "--max-poset", "4", "--out", str(out)]) == 0
    raw = out.read_bytes()
    assert b"\r" not in raw and raw.endswith(b"\n")
    loaded = load_corpus(raw.decode())
    assert [L for _, L in loaded] == [L for _, L in corpus(4)]
    out2 = tmp_path / "again.json"
    main(["gen", "--max-poset", "4", "--out", str(out2)])
    assert out2.read_bytes() == raw


def test_eval_lattice(tmp_path, capsys):
    out = tmp_path / "corpus.json"
    main(["gen", "--max-poset", "2", "--out", str(out)])
    capsys.readouterr()
    entries = json.loads(out.read_text())
    index = next(i for i, e in enumerate(entries) if e["size"] == 2 and not e["covers"])
    bind = "x={a},y={b},z={a,b}"
    assert main(["eval", "--expr", "med(x,y,z)", "--lattice", str(out), "--index", str(index), "--bind", bind]) == 0
    assert capsys.readouterr().out.strip() == "{a,b}"
    assert main(["eval", "--expr", "x & y", "--lattice", str(out), "--index", str(index), "--bind", bind]) == 0
    assert capsys.readouterr().out.strip() == "{}"
    assert main(["eval", "--expr", "x & w", "--lattice", str(out), "--index", str(index), "--bind", bind]) == 2


def test_exit_codes(vectors, tmp_path, capsys):
    assert main(["eval", "--expr", "M2(a,b", "--vectors", vectors]) == 2
    assert "offset 7" in capsys.readouterr().err
    assert main(["eval", "--expr", "a", "--vectors", str(tmp_path / "missing.json")]) == 2
    with pytest.raises(SystemExit) as err:
        main(["verify", "--suite", "nope"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2


def test_verify_sum_exit_zero(tmp_path):
    report = tmp_path / "r.json"
    assert main(["verify", "--suite", "sum", "--seed", "1", "--report", str(report)]) == 0
    data = json.loads(report.read_text())
    assert data["suite"] == "sum" and data["config"]["seed"] == 1
    assert data["summary"]["fail"] == 0


def test_verify_counterexample_subprocess(tmp_path):
    report = tmp_path / "r.json"
    proc = subprocess.run(
        [sys.executable, "-m", "latticemed.cli", "verify", "--suite", "counterexample-sym-not-toi", "--report", str(report)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert "expected-fail: confirmed" in proc.stdout
    verdicts = {c["verdict"] for c in json.loads(report.read_text())["cases"]}
    assert verdicts == {"expected-fail: confirmed"}


def test_verify_genuine_failure_exit_one(monkeypatch, capsys):
    from latticemed import suites

    def broken(cfg):
        return [lambda seed: suites.Case("broken", "fail", checks=1)]

    monkeypatch.setitem(suites.SUITES, "sum", broken)
    assert main(["verify", "--suite", "sum"]) == 1


def test_suites_listing(capsys):
    assert main(["suites"]) == 0
    names = capsys.readouterr().out.split()
    assert "prop-mk" in names and len(names) == 16
