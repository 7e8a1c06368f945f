"""Command-line front end and the lattice-term expression syntax.

Grammar (``&`` binds tighter than ``|``)::

    expr := term ('|' term)*
    term := atom ('&' atom)*
    atom := ident | 'med(' expr ',' expr ',' expr ')' | 'M' digits '(' expr-list ')' | '(' expr ')'

``med`` and ``M<k>`` are keywords only when an opening parenthesis
follows; otherwise they are ordinary identifiers.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from latticemed.coords import CoordTuple
from latticemed.lattice import FiniteLattice, PointwiseLattice
from latticemed.orderization import m_k_pointwise, total_orderization_pointwise
from latticemed.posets import corpus_json
from latticemed.suites import SuiteConfig, run_suite, suite_names
from latticemed.terms import Join, LatticeTerm, Meet, Var, median_term, mk_term, term_eval


class TermSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[&|(),]))")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    """Tokens as ``(kind, text, offset)`` with 1-based offsets; ends with an "end" token."""
    out = []
    pos = 0
    while True:
        m = _TOKEN.match(src, pos)
        if not m:
            rest = src[pos:]
            if rest.strip():
                bad = pos + len(rest) - len(rest.lstrip())
                raise TermSyntaxError(f"unexpected character {src[bad]!r}", bad + 1)
            out.append(("end", "", len(src) + 1))
            return out
        kind = "ident" if m.group("ident") else "op"
        out.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self, ahead: int = 0):
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def take(self, text: str | None = None):
        tok = self.peek()
        if text is not None and tok[1] != text:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise TermSyntaxError(f"expected {text!r}, found {found}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> LatticeTerm:
        parts = [self.term()]
        while self.peek()[1] == "|":
            self.take()
            parts.append(self.term())
        return parts[0] if len(parts) == 1 else Join(tuple(parts))

    def term(self) -> LatticeTerm:
        parts = [self.atom()]
        while self.peek()[1] == "&":
            self.take()
            parts.append(self.atom())
        return parts[0] if len(parts) == 1 else Meet(tuple(parts))

    def args(self) -> list[LatticeTerm]:
        self.take("(")
        out = [self.expr()]
        while self.peek()[1] == ",":
            self.take()
            out.append(self.expr())
        self.take(")")
        return out

    def atom(self) -> LatticeTerm:
        kind, text, offset = self.peek()
        if kind == "ident":
            self.take()
            if self.peek()[1] == "(":
                if text == "med":
                    args = self.args()
                    if len(args) != 3:
                        raise TermSyntaxError(f"med takes 3 arguments, got {len(args)}", offset)
                    return median_term(*args)
                m = re.fullmatch(r"M(\d+)", text)
                if m:
                    k = int(m.group(1))
                    args = self.args()
                    if not 1 <= k <= len(args):
                        raise TermSyntaxError(f"M{k} needs k in [1, {len(args)}]", offset)
                    return mk_term(k, args)
            return Var(text)
        if text == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        found = "end of input" if kind == "end" else repr(text)
        raise TermSyntaxError(f"unexpected {found}", offset)


def parse_term(src: str) -> LatticeTerm:
    p = _Parser(src)
    t = p.expr()
    kind, text, offset = p.peek()
    if kind != "end":
        raise TermSyntaxError(f"unexpected {text!r}", offset)
    return t


def format_term(t: LatticeTerm) -> str:
    """Inverse of :func:`parse_term` on ASTs: nested nodes keep their parentheses."""
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Meet):
        return " & ".join(f"({format_term(c)})" if not isinstance(c, Var) else c.name for c in t.children)
    return " | ".join(f"({format_term(c)})" if isinstance(c, Join) else format_term(c) for c in t.children)


# --- input files --------------------------------------------------------------


class InputError(ValueError):
    pass


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from None


def load_vectors(path: str) -> dict[str, CoordTuple]:
    """Name-to-tuple object, or a list (names ``x1, x2, ...``)."""
    data = _read_json(path)
    if isinstance(data, list):
        data = {f"x{i}": v for i, v in enumerate(data, 1)}
    if not isinstance(data, dict) or not data:
        raise InputError("vectors file must be a non-empty JSON object or list")
    out = {name: CoordTuple.from_json(v) for name, v in data.items()}
    if len({v.dim for v in out.values()}) != 1:
        raise InputError("all vectors must have the same dimension")
    return out


def load_lattice(path: str, index: int | None) -> FiniteLattice:
    """A single lattice object, or an entry of a generated corpus."""
    data = _read_json(path)
    if isinstance(data, list):
        if index is None:
            raise InputError("corpus file given; pass --index")
        if not 0 <= index < len(data):
            raise InputError(f"--index must lie in [0, {len(data) - 1}]")
        data = data[index]["lattice"]
    elif "lattice" in data:
        data = data["lattice"]
    return FiniteLattice.from_json(data)


def parse_bindings(text: str, L: FiniteLattice) -> dict[str, int]:
    """``name=elem,...``; commas inside braces belong to element names like ``{a,b}``."""
    parts, depth, cur = [], 0, ""
    for ch in text:
        depth += ch == "{"
        depth -= ch == "}"
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    out = {}
    for part in parts:
        if "=" not in part:
            raise InputError(f"binding {part!r} is not of the form name=element")
        name, elem = (s.strip() for s in part.split("=", 1))
        if elem in L.names:
            out[name] = L.index(elem)
        elif elem.isdigit() and int(elem) < L.size:
            out[name] = int(elem)
        else:
            raise InputError(f"unknown element {elem!r}")
    return out


# --- commands -----------------------------------------------------------------


def cmd_gen(args) -> int:
    text = corpus_json(args.max_poset)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, newline="\n")
        print(f"wrote {args.out}")
    return 0


def cmd_eval(args) -> int:
    t = parse_term(args.expr)
    if args.vectors:
        vs = load_vectors(args.vectors)
        L = PointwiseLattice(next(iter(vs.values())).dim)
        print(term_eval(t, vs, L))
        return 0
    if not args.bind:
        raise InputError("--lattice needs --bind")
    L = load_lattice(args.lattice, args.index)
    value = term_eval(t, parse_bindings(args.bind, L), L)
    print(L.names[value])
    return 0


def cmd_orderize(args) -> int:
    fs = list(load_vectors(args.vectors).values())
    if args.k is not None:
        if not 1 <= args.k <= len(fs):
            raise InputError(f"--k must lie in [1, {len(fs)}]")
        print(m_k_pointwise(fs, args.k))
        return 0
    for k, m in enumerate(total_orderization_pointwise(fs), 1):
        print(f"M{k} = {m}")
    return 0


def cmd_verify(args) -> int:
    cfg = SuiteConfig(seed=args.seed, tol=args.tol)
    report = run_suite(args.suite, cfg)
    for c in report.cases:
        if c.verdict != "pass":
            print(f"{c.verdict}: {c.id}")
    s = report.summary()
    print(f"{report.suite}: {s['pass']} passed, {s['fail']} failed, {report.checks} checks (seed {cfg.seed})")
    if args.report:
        Path(args.report).write_text(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n")
    return 0 if report.passed else 1


def cmd_suites(args) -> int:
    for name in suite_names():
        print(name)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="latticemed", description="Order statistics on distributive lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write the poset and downset-lattice corpus")
    p.add_argument("--max-poset", type=int, required=True)
    p.add_argument("--out", required=True, help="output file, or - for stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("eval", help="evaluate a lattice term")
    p.add_argument("--expr", required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--lattice")
    src.add_argument("--vectors")
    p.add_argument("--index", type=int, help="entry of a corpus file")
    p.add_argument("--bind", help="name=element,...")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("orderize", help="total orderization of coordinate tuples")
    p.add_argument("--vectors", required=True)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_orderize)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=suite_names(), metavar="NAME")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("suites", help="list suite names")
    p.set_defaults(func=cmd_suites)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen" and not 0 <= args.max_poset <= 6:
        parser.error("--max-poset must lie in [0, 6]")
    try:
        return args.func(args)
    except (ValueError, LookupError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
