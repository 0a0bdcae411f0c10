"""The wire format: S-expressions for terms, formulas, proofs, and
primitive recursive expressions.

Grammar (atoms are unsigned decimal naturals or symbol names):

    term     := (var n) | (num n) | (apply SYM term...)
    formula  := (equal t u) | (atomic SYM t...) | (imp f g) | (not f)
              | (forall n f)
    proof    := (axm f) | (mp p q) | (gen n p) | (imp1 f g) | (imp2 f g h)
              | (cp f g) | (fa1 f n t) | (fa2 f n) | (fa3 f g n)
              | (eq1) | (eq2) | (eq3) | (eq4 SYM) | (eq5 SYM)
    primrec  := (succ) | (zero) | (proj n m) | (compose n m (g...) h)
              | (primrec n g h)

Parsing then printing is the identity on values; printing then parsing
canonicalizes (whitespace and numeral spellings: unary Succ/Zero spines
print as (num n), (apply Zero) parses to (num 0)).  Numerals are unbounded
decimal; the CPython digit limit is lifted around conversions because
diagonal sentences carry numerals far past its default.
"""

from __future__ import annotations

import sys
from contextlib import contextmanager
from dataclasses import dataclass

from . import kernel, primrec
from .arith import LNN
from .fol import (
    Apply,
    Atomic,
    Equal,
    Forall,
    Formula,
    FuncSym,
    Imp,
    Language,
    Not,
    Num,
    RelSym,
    SUCC,
    Term,
    Var,
    ZERO,
    app,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


@contextmanager
def _unlimited_digits():
    if hasattr(sys, "get_int_max_str_digits"):
        old = sys.get_int_max_str_digits()
        sys.set_int_max_str_digits(0)
        try:
            yield
        finally:
            sys.set_int_max_str_digits(old)
    else:  # pragma: no cover - older interpreters have no limit
        yield


@dataclass
class _Atom:
    text: str
    line: int
    col: int


class _Node(list):
    """A parenthesized group; keeps the position of its opening paren."""

    def __init__(self, line: int, col: int):
        super().__init__()
        self.line = line
        self.col = col


def _tokenize(text: str):
    line, col = 1, 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 0
            i += 1
            continue
        col += 1
        if ch in " \t\r":
            i += 1
            continue
        if ch == ";":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch in "()":
            yield (ch, line, col)
            i += 1
            continue
        start = i
        start_col = col
        while i < len(text) and text[i] not in " \t\r\n();":
            i += 1
            col += 1
        col -= 1
        yield (_Atom(text[start:i], line, start_col), line, start_col)


def _read_all(text: str) -> list:
    stack: list[_Node] = []
    top: list = []
    for tok, line, col in _tokenize(text):
        if tok == "(":
            node = _Node(line, col)
            (stack[-1] if stack else top).append(node)
            stack.append(node)
        elif tok == ")":
            if not stack:
                raise ParseError("unexpected ')'", line, col)
            stack.pop()
        else:
            (stack[-1] if stack else top).append(tok)
    if stack:
        raise ParseError("unclosed '('", stack[-1].line, stack[-1].col)
    return top


def _pos(x) -> tuple[int, int]:
    return (x.line, x.col)


def _want_nat(x) -> int:
    if not isinstance(x, _Atom) or not x.text.isdigit():
        raise ParseError("expected a natural number", *_pos(x))
    with _unlimited_digits():
        return int(x.text)


def _want_symbol(x) -> str:
    if not isinstance(x, _Atom) or x.text[0].isdigit():
        raise ParseError("expected a symbol name", *_pos(x))
    return x.text


def _head(node) -> str:
    if not isinstance(node, _Node):
        raise ParseError("expected a parenthesized form", *_pos(node))
    if not node or not isinstance(node[0], _Atom):
        raise ParseError("empty or headless form", node.line, node.col)
    return node[0].text.lower()


def _arg_count(node, n: int):
    if len(node) - 1 != n:
        raise ParseError(
            f"({_head(node)} ...) wants {n} argument(s), got {len(node) - 1}",
            node.line,
            node.col,
        )


def _func_by_name(lang: Language, name: str, node) -> FuncSym:
    for f in lang.functions:
        if f.name == name:
            return f
    raise ParseError(f"unknown function symbol {name}", node.line, node.col)


def _rel_by_name(lang: Language, name: str, node) -> RelSym:
    for r in lang.relations:
        if r.name == name:
            return r
    raise ParseError(f"unknown relation symbol {name}", node.line, node.col)


def _term(node, lang: Language) -> Term:
    head = _head(node)
    if head == "var":
        _arg_count(node, 1)
        return Var(_want_nat(node[1]))
    if head == "num":
        _arg_count(node, 1)
        return Num(_want_nat(node[1]))
    if head == "apply":
        if len(node) < 2:
            raise ParseError("(apply ...) wants a symbol", node.line, node.col)
        f = _func_by_name(lang, _want_symbol(node[1]), node)
        args = [_term(a, lang) for a in node[2:]]
        if len(args) != f.arity:
            raise ParseError(
                f"{f.name} expects {f.arity} argument(s), got {len(args)}",
                node.line,
                node.col,
            )
        return app(f, *args)
    raise ParseError(f"unknown term form ({head} ...)", node.line, node.col)


def _formula(node, lang: Language) -> Formula:
    head = _head(node)
    if head == "equal":
        _arg_count(node, 2)
        return Equal(_term(node[1], lang), _term(node[2], lang))
    if head == "atomic":
        if len(node) < 2:
            raise ParseError("(atomic ...) wants a symbol", node.line, node.col)
        r = _rel_by_name(lang, _want_symbol(node[1]), node)
        args = [_term(a, lang) for a in node[2:]]
        if len(args) != r.arity:
            raise ParseError(
                f"{r.name} expects {r.arity} argument(s), got {len(args)}",
                node.line,
                node.col,
            )
        return Atomic(r, tuple(args))
    if head == "imp":
        _arg_count(node, 2)
        return Imp(_formula(node[1], lang), _formula(node[2], lang))
    if head == "not":
        _arg_count(node, 1)
        return Not(_formula(node[1], lang))
    if head == "forall":
        _arg_count(node, 2)
        return Forall(_want_nat(node[1]), _formula(node[2], lang))
    raise ParseError(f"unknown formula form ({head} ...)", node.line, node.col)


def _proof(node, lang: Language) -> kernel.Proof:
    head = _head(node)
    try:
        if head == "axm":
            _arg_count(node, 1)
            return kernel.Axm(_formula(node[1], lang))
        if head == "mp":
            _arg_count(node, 2)
            return kernel.Mp(_proof(node[1], lang), _proof(node[2], lang))
        if head == "gen":
            _arg_count(node, 2)
            return kernel.Gen(_want_nat(node[1]), _proof(node[2], lang))
        if head == "imp1":
            _arg_count(node, 2)
            return kernel.Imp1(_formula(node[1], lang), _formula(node[2], lang))
        if head == "imp2":
            _arg_count(node, 3)
            return kernel.Imp2(
                _formula(node[1], lang),
                _formula(node[2], lang),
                _formula(node[3], lang),
            )
        if head == "cp":
            _arg_count(node, 2)
            return kernel.Cp(_formula(node[1], lang), _formula(node[2], lang))
        if head == "fa1":
            _arg_count(node, 3)
            return kernel.Fa1(
                _formula(node[1], lang), _want_nat(node[2]), _term(node[3], lang)
            )
        if head == "fa2":
            _arg_count(node, 2)
            return kernel.Fa2(_formula(node[1], lang), _want_nat(node[2]))
        if head == "fa3":
            _arg_count(node, 3)
            return kernel.Fa3(
                _formula(node[1], lang), _formula(node[2], lang), _want_nat(node[3])
            )
        if head == "eq1":
            _arg_count(node, 0)
            return kernel.Eq1()
        if head == "eq2":
            _arg_count(node, 0)
            return kernel.Eq2()
        if head == "eq3":
            _arg_count(node, 0)
            return kernel.Eq3()
        if head == "eq4":
            _arg_count(node, 1)
            return kernel.Eq4(_rel_by_name(lang, _want_symbol(node[1]), node))
        if head == "eq5":
            _arg_count(node, 1)
            return kernel.Eq5(_func_by_name(lang, _want_symbol(node[1]), node))
    except kernel.IllFormed as exc:
        raise ParseError(str(exc), node.line, node.col) from exc
    raise ParseError(f"unknown proof form ({head} ...)", node.line, node.col)


def _primrec(node) -> primrec.PrimRecExpr:
    head = _head(node)
    try:
        if head == "succ":
            _arg_count(node, 0)
            return primrec.SuccF()
        if head == "zero":
            _arg_count(node, 0)
            return primrec.ZeroF()
        if head == "proj":
            _arg_count(node, 2)
            return primrec.Proj(_want_nat(node[1]), _want_nat(node[2]))
        if head == "compose":
            _arg_count(node, 4)
            n = _want_nat(node[1])
            m = _want_nat(node[2])
            if not isinstance(node[3], _Node):
                raise ParseError("expected (g...)", *_pos(node[3]))
            gs = tuple(_primrec(g) for g in node[3])
            if len(gs) != m:
                raise ParseError(
                    f"compose declares {m} part(s), got {len(gs)}",
                    node.line,
                    node.col,
                )
            return primrec.Compose(n, gs, _primrec(node[4]))
        if head == "primrec":
            _arg_count(node, 3)
            return primrec.PrimRec(
                _want_nat(node[1]), _primrec(node[2]), _primrec(node[3])
            )
    except primrec.ArityMismatch as exc:
        raise ParseError(str(exc), node.line, node.col) from exc
    raise ParseError(f"unknown expression form ({head} ...)", node.line, node.col)


def _single(text: str, what: str):
    top = _read_all(text)
    if len(top) != 1:
        raise ParseError(f"expected exactly one {what}", 1, 1)
    return top[0]


def parse_term(text: str, lang: Language = LNN) -> Term:
    return _term(_single(text, "term"), lang)


def parse_formula(text: str, lang: Language = LNN) -> Formula:
    return _formula(_single(text, "formula"), lang)


def parse_proof(text: str, lang: Language = LNN) -> kernel.Proof:
    return _proof(_single(text, "proof"), lang)


def parse_primrec(text: str) -> primrec.PrimRecExpr:
    return _primrec(_single(text, "expression"))


def parse_formula_list(text: str, lang: Language = LNN) -> list[Formula]:
    return [_formula(node, lang) for node in _read_all(text)]


def _numeral_spine(t: Term) -> int | None:
    # Succ towers over Zero (in any mix of sugar and raw applications)
    # print as one (num n).
    steps = 0
    while isinstance(t, Apply) and t.func == SUCC:
        t = t.args[0]
        steps += 1
    if isinstance(t, Num):
        return t.value + steps
    if isinstance(t, Apply) and t.func == ZERO:
        return steps
    return None


def format_term(t: Term) -> str:
    n = _numeral_spine(t)
    if n is not None:
        with _unlimited_digits():
            return f"(num {n})"
    match t:
        case Var(index=i):
            return f"(var {i})"
        case Apply(func=f, args=args):
            inner = "".join(" " + format_term(a) for a in args)
            return f"(apply {f.name}{inner})"
    raise TypeError(f"not a term: {t!r}")


def format_formula(f: Formula) -> str:
    match f:
        case Equal(left=l, right=r):
            return f"(equal {format_term(l)} {format_term(r)})"
        case Atomic(rel=r, args=args):
            inner = "".join(" " + format_term(a) for a in args)
            return f"(atomic {r.name}{inner})"
        case Imp(antecedent=a, consequent=b):
            return f"(imp {format_formula(a)} {format_formula(b)})"
        case Not(body=b):
            return f"(not {format_formula(b)})"
        case Forall(var=v, body=b):
            return f"(forall {v} {format_formula(b)})"
    raise TypeError(f"not a formula: {f!r}")


def format_proof(p: kernel.Proof) -> str:
    match p:
        case kernel.Axm(formula=f):
            return f"(axm {format_formula(f)})"
        case kernel.Mp(implication=a, minor=b):
            return f"(mp {format_proof(a)} {format_proof(b)})"
        case kernel.Gen(var=v, premise=q):
            return f"(gen {v} {format_proof(q)})"
        case kernel.Imp1(a=a, b=b):
            return f"(imp1 {format_formula(a)} {format_formula(b)})"
        case kernel.Imp2(a=a, b=b, c=c):
            return f"(imp2 {format_formula(a)} {format_formula(b)} {format_formula(c)})"
        case kernel.Cp(a=a, b=b):
            return f"(cp {format_formula(a)} {format_formula(b)})"
        case kernel.Fa1(a=a, var=v, term=t):
            return f"(fa1 {format_formula(a)} {v} {format_term(t)})"
        case kernel.Fa2(a=a, var=v):
            return f"(fa2 {format_formula(a)} {v})"
        case kernel.Fa3(a=a, b=b, var=v):
            return f"(fa3 {format_formula(a)} {format_formula(b)} {v})"
        case kernel.Eq1():
            return "(eq1)"
        case kernel.Eq2():
            return "(eq2)"
        case kernel.Eq3():
            return "(eq3)"
        case kernel.Eq4(rel=r):
            return f"(eq4 {r.name})"
        case kernel.Eq5(func=f):
            return f"(eq5 {f.name})"
    raise TypeError(f"not a proof: {p!r}")


def format_primrec(e: primrec.PrimRecExpr) -> str:
    match e:
        case primrec.SuccF():
            return "(succ)"
        case primrec.ZeroF():
            return "(zero)"
        case primrec.Proj(n=n, m=m):
            return f"(proj {n} {m})"
        case primrec.Compose(n=n, gs=gs, h=h):
            inner = "".join(" " + format_primrec(g) for g in gs).lstrip()
            return f"(compose {n} {len(gs)} ({inner}) {format_primrec(h)})"
        case primrec.PrimRec(n=n, g=g, h=h):
            return f"(primrec {n} {format_primrec(g)} {format_primrec(h)})"
    raise TypeError(f"not a primitive recursive expression: {e!r}")
