"""Gödel numbering and code-level computation.

Everything is built on the Cantor pairing function

    pair(a, b) = a + sum(i for i in 1..a+b) = a + (a+b)(a+b+1)/2

Conventions (normative for this artifact; the tags for formulas follow the
standard listing, the rest is fixed here so every derived value reproduces):

* terms:     Var n          -> pair(0, n)
             Apply f args   -> pair(1 + func_code(f), code of args)
             argument lists: []  -> 0,  t::ts -> pair(code t, code ts)
* formulas:  equal  -> tag 0, imp -> 1, not -> 2, forall -> 3,
             atomic R -> tag 4 + rel_code(R)
* symbol codes are positions in the language's symbol tuples
  (LNN: Plus=0, Times=1, Succ=2, Zero=3; LT=0).
* general lists (axiom lists, trace children) are self-delimiting:
             [] -> 0,  h::t -> 1 + pair(h, code t)
* proofs:    tags Axm=0 Mp=1 Gen=2 Imp1=3 Imp2=4 Cp=5 Fa1=6 Fa2=7 Fa3=8
             Eq1=9 Eq2=10 Eq3=11 Eq4=12 Eq5=13; parameters right-nested
             with pair() in constructor order, nullary rules carry 0.

Decoders are total: a natural that does not denote a well-formed object
yields ``None`` (the not-a-code marker) instead of an exception.

The code-level substitution ``code_subst_formula`` recurses on codes alone
(its own free-variable and renaming machinery) and uses the same
least-unused fresh-variable rule as the syntax module, so

    code_subst_formula(code(f), v, code(s)) == code(subst_formula(f, v, s))

holds structurally, not just up to renaming.  The substitution-trace
apparatus packages each recursive call of that computation as a checkable
tree of naturals.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from . import kernel
from .arith import LNN
from .fol import (
    SUCC as _SUCC_SYM,
    ZERO as _ZERO_SYM,
    Apply,
    Atomic,
    Equal,
    Forall,
    Formula,
    Imp,
    Language,
    Not,
    Num,
    Term,
    Var,
    fresh_var,
    subst_formula,
)


class BudgetExceeded(RuntimeError):
    """A numeral-term code went past the caller's size budget."""


def cantor_pair(a: int, b: int) -> int:
    s = a + b
    return a + s * (s + 1) // 2


def cantor_unpair(n: int) -> tuple[int, int]:
    w = (isqrt(8 * n + 1) - 1) // 2
    a = n - w * (w + 1) // 2
    return a, w - a


def code_list(items: list[int]) -> int:
    out = 0
    for h in reversed(items):
        out = 1 + cantor_pair(h, out)
    return out


def decode_list(n: int) -> list[int]:
    out = []
    while n:
        h, n = cantor_unpair(n - 1)
        out.append(h)
    return out


def _func_codes(lang: Language) -> dict:
    return {f: i for i, f in enumerate(lang.functions)}


def _rel_codes(lang: Language) -> dict:
    return {r: i for i, r in enumerate(lang.relations)}


_LNN_FUNC = _func_codes(LNN)
_LNN_REL = _rel_codes(LNN)


def code_term(t: Term, lang: Language = LNN) -> int:
    fc = _LNN_FUNC if lang is LNN else _func_codes(lang)
    return _code_term(t, fc)


def _code_term(t: Term, fc) -> int:
    match t:
        case Var(index=i):
            return cantor_pair(0, i)
        case Num(value=n):
            return _numeral_code(n, fc)
        case Apply(func=f, args=args):
            return cantor_pair(1 + fc[f], _code_terms(args, fc))
    raise TypeError(f"not a term: {t!r}")


def _code_terms(ts, fc) -> int:
    out = 0
    for t in reversed(ts):
        out = cantor_pair(_code_term(t, fc), out)
    return out


def code_terms(ts: tuple[Term, ...], lang: Language = LNN) -> int:
    fc = _LNN_FUNC if lang is LNN else _func_codes(lang)
    return _code_terms(ts, fc)


def _numeral_code(n: int, fc, bit_budget: int | None = None) -> int:
    from .fol import SUCC, ZERO

    c = cantor_pair(1 + fc[ZERO], 0)
    succ_tag = 1 + fc[SUCC]
    for k in range(n):
        if bit_budget is not None and c.bit_length() > bit_budget:
            raise BudgetExceeded(
                f"numeral code for {n} passed {bit_budget} bits at step {k}"
            )
        c = cantor_pair(succ_tag, cantor_pair(c, 0))
    if bit_budget is not None and c.bit_length() > bit_budget:
        raise BudgetExceeded(f"numeral code for {n} exceeds {bit_budget} bits")
    return c


def code_numeral_term(n: int, bit_budget: int | None = None) -> int:
    """Code of the numeral term for n without expanding the sugar.

    The bit length roughly doubles per successor, so this is only feasible
    for small n; pass ``bit_budget`` to fail fast instead of grinding.
    """
    return _numeral_code(n, _LNN_FUNC, bit_budget)


def code_formula(f: Formula, lang: Language = LNN) -> int:
    fc = _LNN_FUNC if lang is LNN else _func_codes(lang)
    rc = _LNN_REL if lang is LNN else _rel_codes(lang)
    return _code_formula(f, fc, rc)


def _code_formula(f: Formula, fc, rc) -> int:
    match f:
        case Equal(left=l, right=r):
            return cantor_pair(0, cantor_pair(_code_term(l, fc), _code_term(r, fc)))
        case Imp(antecedent=a, consequent=b):
            return cantor_pair(
                1, cantor_pair(_code_formula(a, fc, rc), _code_formula(b, fc, rc))
            )
        case Not(body=b):
            return cantor_pair(2, _code_formula(b, fc, rc))
        case Forall(var=v, body=b):
            return cantor_pair(3, cantor_pair(v, _code_formula(b, fc, rc)))
        case Atomic(rel=r, args=args):
            return cantor_pair(4 + rc[r], _code_terms(args, fc))
    raise TypeError(f"not a formula: {f!r}")


def decode_term(n: int, lang: Language = LNN) -> Term | None:
    tag, payload = cantor_unpair(n)
    if tag == 0:
        return Var(payload)
    idx = tag - 1
    if idx >= len(lang.functions):
        return None
    f = lang.functions[idx]
    args = _decode_terms(payload, f.arity, lang)
    if args is None:
        return None
    from .fol import app

    return app(f, *args)


def _decode_terms(n: int, count: int, lang: Language) -> list[Term] | None:
    out: list[Term] = []
    for _ in range(count):
        h, n = cantor_unpair(n)
        t = decode_term(h, lang)
        if t is None:
            return None
        out.append(t)
    if n != 0:
        return None
    return out


def decode_formula(n: int, lang: Language = LNN) -> Formula | None:
    tag, payload = cantor_unpair(n)
    if tag == 0:
        a, b = cantor_unpair(payload)
        l, r = decode_term(a, lang), decode_term(b, lang)
        if l is None or r is None:
            return None
        return Equal(l, r)
    if tag == 1:
        a, b = cantor_unpair(payload)
        fa, fb = decode_formula(a, lang), decode_formula(b, lang)
        if fa is None or fb is None:
            return None
        return Imp(fa, fb)
    if tag == 2:
        fb = decode_formula(payload, lang)
        return None if fb is None else Not(fb)
    if tag == 3:
        v, b = cantor_unpair(payload)
        fb = decode_formula(b, lang)
        return None if fb is None else Forall(v, fb)
    idx = tag - 4
    if idx >= len(lang.relations):
        return None
    r = lang.relations[idx]
    args = _decode_terms(payload, r.arity, lang)
    if args is None:
        return None
    return Atomic(r, tuple(args))


def _log2_pair(la: float, lb: float) -> float:
    # log2 of cantor_pair(a, b) from log2(a+1), log2(b+1); good to a few bits.
    import math as _m

    if la == float("inf") or lb == float("inf"):
        return float("inf")
    ls = max(la, lb) + _m.log2(1 + 2 ** (-abs(la - lb)))
    return max(2 * ls - 1, la)


def code_size_bits(f: Formula, lang: Language = LNN) -> float:
    """Approximate bit length of ``code_formula(f)`` without computing it.

    Codes double their bit length per pairing, so deep formulas have codes
    far too large to materialize; this estimator (a few bits of slack per
    level) lets callers refuse such requests up front.
    """
    fc = _LNN_FUNC if lang is LNN else _func_codes(lang)
    rc = _LNN_REL if lang is LNN else _rel_codes(lang)

    def lterm(t: Term) -> float:
        match t:
            case Var(index=i):
                return _log2_pair(0.0, (i + 1).bit_length())
            case Num(value=n):
                if n > 4096:
                    return float("inf")
                acc = lterms_list([])
                acc = _log2_pair((1 + fc[_ZERO_SYM]).bit_length(), acc)
                for _ in range(n):
                    acc = _log2_pair((1 + fc[_SUCC_SYM]).bit_length(), _log2_pair(acc, 0.0))
                return acc
            case Apply(func=fn, args=args):
                return _log2_pair((1 + fc[fn]).bit_length(), lterms_list(list(args)))
        raise TypeError(f"not a term: {t!r}")

    def lterms_list(ts: list[Term]) -> float:
        acc = 0.0
        for t in reversed(ts):
            acc = _log2_pair(lterm(t), acc)
        return acc

    def lform(g: Formula) -> float:
        match g:
            case Equal(left=l, right=r):
                return _log2_pair(1.0, _log2_pair(lterm(l), lterm(r)))
            case Imp(antecedent=a, consequent=b):
                return _log2_pair(1.0, _log2_pair(lform(a), lform(b)))
            case Not(body=b):
                return _log2_pair(2.0, lform(b))
            case Forall(var=v, body=b):
                return _log2_pair(2.0, _log2_pair((v + 1).bit_length(), lform(b)))
            case Atomic(rel=r, args=args):
                return _log2_pair(
                    (4 + rc[r] + 1).bit_length(), lterms_list(list(args))
                )
        raise TypeError(f"not a formula: {g!r}")

    return lform(f)


# --- code-level free variables and substitution ---------------------------
#
# These never build Term/Formula values; they recurse on the numbers
# themselves, which is what makes the commuting-square test a genuine
# two-route check.

def _term_code_free_vars(n: int, lang: Language) -> set[int] | None:
    tag, payload = cantor_unpair(n)
    if tag == 0:
        return {payload}
    idx = tag - 1
    if idx >= len(lang.functions):
        return None
    out: set[int] = set()
    rest = payload
    for _ in range(lang.functions[idx].arity):
        h, rest = cantor_unpair(rest)
        sub = _term_code_free_vars(h, lang)
        if sub is None:
            return None
        out |= sub
    return None if rest != 0 else out


def _formula_code_free_vars(n: int, lang: Language) -> set[int] | None:
    tag, payload = cantor_unpair(n)
    if tag == 0:
        a, b = cantor_unpair(payload)
        fa = _term_code_free_vars(a, lang)
        fb = _term_code_free_vars(b, lang)
        if fa is None or fb is None:
            return None
        return fa | fb
    if tag == 1:
        a, b = cantor_unpair(payload)
        fa = _formula_code_free_vars(a, lang)
        fb = _formula_code_free_vars(b, lang)
        if fa is None or fb is None:
            return None
        return fa | fb
    if tag == 2:
        return _formula_code_free_vars(payload, lang)
    if tag == 3:
        v, b = cantor_unpair(payload)
        fb = _formula_code_free_vars(b, lang)
        return None if fb is None else fb - {v}
    idx = tag - 4
    if idx >= len(lang.relations):
        return None
    out: set[int] = set()
    rest = payload
    for _ in range(lang.relations[idx].arity):
        h, rest = cantor_unpair(rest)
        sub = _term_code_free_vars(h, lang)
        if sub is None:
            return None
        out |= sub
    return None if rest != 0 else out


def code_subst_term(tc: int, v: int, sc: int, lang: Language = LNN) -> int | None:
    tag, payload = cantor_unpair(tc)
    if tag == 0:
        return sc if payload == v else tc
    idx = tag - 1
    if idx >= len(lang.functions):
        return None
    new_args: list[int] = []
    rest = payload
    for _ in range(lang.functions[idx].arity):
        h, rest = cantor_unpair(rest)
        sub = code_subst_term(h, v, sc, lang)
        if sub is None:
            return None
        new_args.append(sub)
    if rest != 0:
        return None
    out = 0
    for a in reversed(new_args):
        out = cantor_pair(a, out)
    return cantor_pair(tag, out)


def code_subst_formula(fc: int, v: int, sc: int, lang: Language = LNN) -> int | None:
    """Substitution computed directly on codes.

    When ``fc`` and ``sc`` are codes of a formula and a term this equals the
    code of the object-level capture-avoiding substitution; on anything else
    it returns the not-a-code marker ``None``.  The quantifier case re-derives
    the renaming decision and the fresh index from the codes alone.
    """
    if _term_code_free_vars(sc, lang) is None:
        return None
    return _code_subst(fc, v, sc, lang)


def _code_subst(fc: int, v: int, sc: int, lang: Language) -> int | None:
    tag, payload = cantor_unpair(fc)
    if tag == 0:
        a, b = cantor_unpair(payload)
        sa, sb = code_subst_term(a, v, sc, lang), code_subst_term(b, v, sc, lang)
        if sa is None or sb is None:
            return None
        return cantor_pair(0, cantor_pair(sa, sb))
    if tag == 1:
        a, b = cantor_unpair(payload)
        sa, sb = _code_subst(a, v, sc, lang), _code_subst(b, v, sc, lang)
        if sa is None or sb is None:
            return None
        return cantor_pair(1, cantor_pair(sa, sb))
    if tag == 2:
        sb = _code_subst(payload, v, sc, lang)
        return None if sb is None else cantor_pair(2, sb)
    if tag == 3:
        j, body = cantor_unpair(payload)
        if j == v:
            # Validate the body so garbage stays flagged as garbage.
            if _formula_code_free_vars(body, lang) is None:
                return None
            return fc
        g_free = _formula_code_free_vars(body, lang)
        s_free = _term_code_free_vars(sc, lang)
        if g_free is None or s_free is None:
            return None
        if j in s_free and v in g_free:
            k = fresh_var({v} | g_free | s_free | {j})
            renamed = _code_subst(body, j, cantor_pair(0, k), lang)
            if renamed is None:
                return None
            out = _code_subst(renamed, v, sc, lang)
            if out is None:
                return None
            return cantor_pair(3, cantor_pair(k, out))
        out = _code_subst(body, v, sc, lang)
        return None if out is None else cantor_pair(3, cantor_pair(j, out))
    idx = tag - 4
    if idx >= len(lang.relations):
        return None
    new_args: list[int] = []
    rest = payload
    for _ in range(lang.relations[idx].arity):
        h, rest = cantor_unpair(rest)
        sub = code_subst_term(h, v, sc, lang)
        if sub is None:
            return None
        new_args.append(sub)
    if rest != 0:
        return None
    out = 0
    for a in reversed(new_args):
        out = cantor_pair(a, out)
    return cantor_pair(tag, out)


# --- the trace of the substitution computation -----------------------------

@dataclass(frozen=True)
class SubTrace:
    """One recursive call of the code-level substitution.

    ``renamed_code`` is populated only in the bound-variable renaming case
    and holds the code of the intermediate formula after the rename; the
    node then has two children (the rename pass and the outer pass).
    """

    input_code: int
    var: int
    repl_code: int
    output_code: int
    renamed_code: int | None
    children: tuple["SubTrace", ...]


def trace_subst(f: Formula, v: int, s: Term, lang: Language = LNN) -> SubTrace:
    """Replay subst_formula, recording every recursive call with its codes."""
    fc = code_formula(f, lang)
    sc = code_term(s, lang)

    def leaf(out_formula: Formula) -> SubTrace:
        return SubTrace(fc, v, sc, code_formula(out_formula, lang), None, ())

    match f:
        case Equal() | Atomic():
            return leaf(subst_formula(f, v, s))
        case Imp(antecedent=a, consequent=b):
            ta = trace_subst(a, v, s, lang)
            tb = trace_subst(b, v, s, lang)
            out = cantor_pair(1, cantor_pair(ta.output_code, tb.output_code))
            return SubTrace(fc, v, sc, out, None, (ta, tb))
        case Not(body=b):
            tb = trace_subst(b, v, s, lang)
            out = cantor_pair(2, tb.output_code)
            return SubTrace(fc, v, sc, out, None, (tb,))
        case Forall(var=j, body=g):
            if j == v:
                return SubTrace(fc, v, sc, fc, None, ())
            from .fol import free_vars_formula, free_vars_term

            s_free = free_vars_term(s)
            g_free = free_vars_formula(g)
            if j in s_free and v in g_free:
                k = fresh_var({v} | g_free | s_free | {j})
                t1 = trace_subst(g, j, Var(k), lang)
                renamed = subst_formula(g, j, Var(k))
                t2 = trace_subst(renamed, v, s, lang)
                out = cantor_pair(3, cantor_pair(k, t2.output_code))
                return SubTrace(fc, v, sc, out, t1.output_code, (t1, t2))
            tg = trace_subst(g, v, s, lang)
            out = cantor_pair(3, cantor_pair(j, tg.output_code))
            return SubTrace(fc, v, sc, out, None, (tg,))
    raise TypeError(f"not a formula: {f!r}")


def code_trace(tr: SubTrace) -> int:
    header = cantor_pair(
        tr.input_code,
        cantor_pair(
            tr.var,
            cantor_pair(
                tr.repl_code,
                cantor_pair(
                    tr.output_code,
                    0 if tr.renamed_code is None else tr.renamed_code + 1,
                ),
            ),
        ),
    )
    return cantor_pair(header, code_list([code_trace(c) for c in tr.children]))


def _parse_trace(n: int) -> SubTrace:
    header, child_code = cantor_unpair(n)
    inp, rest = cantor_unpair(header)
    var, rest = cantor_unpair(rest)
    repl, rest = cantor_unpair(rest)
    out, renamed_opt = cantor_unpair(rest)
    children = tuple(_parse_trace(c) for c in decode_list(child_code))
    renamed = None if renamed_opt == 0 else renamed_opt - 1
    return SubTrace(inp, var, repl, out, renamed, children)


def _valid_trace(tr: SubTrace, lang: Language) -> bool:
    fc, v, sc = tr.input_code, tr.var, tr.repl_code
    if _term_code_free_vars(sc, lang) is None:
        return False
    tag, payload = cantor_unpair(fc)
    if tag == 0 or tag >= 4:
        if tr.children or tr.renamed_code is not None:
            return False
        return tr.output_code == _code_subst(fc, v, sc, lang)
    if tag == 1:
        a, b = cantor_unpair(payload)
        if len(tr.children) != 2 or tr.renamed_code is not None:
            return False
        c1, c2 = tr.children
        return (
            (c1.input_code, c1.var, c1.repl_code) == (a, v, sc)
            and (c2.input_code, c2.var, c2.repl_code) == (b, v, sc)
            and tr.output_code
            == cantor_pair(1, cantor_pair(c1.output_code, c2.output_code))
            and _valid_trace(c1, lang)
            and _valid_trace(c2, lang)
        )
    if tag == 2:
        if len(tr.children) != 1 or tr.renamed_code is not None:
            return False
        (c1,) = tr.children
        return (
            (c1.input_code, c1.var, c1.repl_code) == (payload, v, sc)
            and tr.output_code == cantor_pair(2, c1.output_code)
            and _valid_trace(c1, lang)
        )
    if tag == 3:
        j, body = cantor_unpair(payload)
        if j == v:
            return (
                not tr.children
                and tr.renamed_code is None
                and tr.output_code == fc
                and _formula_code_free_vars(body, lang) is not None
            )
        g_free = _formula_code_free_vars(body, lang)
        if g_free is None:
            return False
        s_free = _term_code_free_vars(sc, lang)
        if j in s_free and v in g_free:
            if len(tr.children) != 2:
                return False
            c1, c2 = tr.children
            k = fresh_var({v} | g_free | s_free | {j})
            return (
                (c1.input_code, c1.var, c1.repl_code) == (body, j, cantor_pair(0, k))
                and tr.renamed_code == c1.output_code
                and (c2.input_code, c2.var, c2.repl_code)
                == (c1.output_code, v, sc)
                and tr.output_code
                == cantor_pair(3, cantor_pair(k, c2.output_code))
                and _valid_trace(c1, lang)
                and _valid_trace(c2, lang)
            )
        if len(tr.children) != 1 or tr.renamed_code is not None:
            return False
        (c1,) = tr.children
        return (
            (c1.input_code, c1.var, c1.repl_code) == (body, v, sc)
            and tr.output_code == cantor_pair(3, cantor_pair(j, c1.output_code))
            and _valid_trace(c1, lang)
        )
    return False


def check_trace_code(n: int, lang: Language = LNN) -> bool:
    """Accepts exactly the codes of valid substitution traces."""
    return _valid_trace(_parse_trace(n), lang)


def extract_from_trace(n: int, lang: Language = LNN) -> int | None:
    """Output field of the root node, or None if n is not a valid trace."""
    tr = _parse_trace(n)
    if not _valid_trace(tr, lang):
        return None
    return tr.output_code


def trace_bound(fc: int, v: int, sc: int, lang: Language = LNN) -> int:
    """An upper bound on the code of the substitution trace for these codes.

    Computed by replaying the substitution on the decoded inputs and padding
    the exact trace code; it grows monotonically with the decoded inputs
    (every combining step is the monotone pairing function) and dominates
    ``code_trace(trace_subst(...))`` by construction.  The search the bound
    exists to cap is astronomically large either way and is not executed.
    """
    f = decode_formula(fc, lang)
    s = decode_term(sc, lang)
    if f is None or s is None:
        return 2 * (fc + v + sc) + 1
    return 2 * code_trace(trace_subst(f, v, s, lang)) + 1


# --- proof coding and the total checker ------------------------------------

_PROOF_TAGS = {
    kernel.Axm: 0,
    kernel.Mp: 1,
    kernel.Gen: 2,
    kernel.Imp1: 3,
    kernel.Imp2: 4,
    kernel.Cp: 5,
    kernel.Fa1: 6,
    kernel.Fa2: 7,
    kernel.Fa3: 8,
    kernel.Eq1: 9,
    kernel.Eq2: 10,
    kernel.Eq3: 11,
    kernel.Eq4: 12,
    kernel.Eq5: 13,
}


def code_proof(p: kernel.Proof, lang: Language = LNN) -> int:
    cf = lambda f: code_formula(f, lang)
    rc = _LNN_REL if lang is LNN else _rel_codes(lang)
    fc = _LNN_FUNC if lang is LNN else _func_codes(lang)
    match p:
        case kernel.Axm(formula=f):
            payload = cf(f)
        case kernel.Mp(implication=a, minor=b):
            payload = cantor_pair(code_proof(a, lang), code_proof(b, lang))
        case kernel.Gen(var=v, premise=q):
            payload = cantor_pair(v, code_proof(q, lang))
        case kernel.Imp1(a=a, b=b):
            payload = cantor_pair(cf(a), cf(b))
        case kernel.Imp2(a=a, b=b, c=c):
            payload = cantor_pair(cf(a), cantor_pair(cf(b), cf(c)))
        case kernel.Cp(a=a, b=b):
            payload = cantor_pair(cf(a), cf(b))
        case kernel.Fa1(a=a, var=v, term=t):
            payload = cantor_pair(cf(a), cantor_pair(v, code_term(t, lang)))
        case kernel.Fa2(a=a, var=v):
            payload = cantor_pair(cf(a), v)
        case kernel.Fa3(a=a, b=b, var=v):
            payload = cantor_pair(cf(a), cantor_pair(cf(b), v))
        case kernel.Eq1() | kernel.Eq2() | kernel.Eq3():
            payload = 0
        case kernel.Eq4(rel=r):
            payload = rc[r]
        case kernel.Eq5(func=f):
            payload = fc[f]
        case _:
            raise TypeError(f"not a proof: {p!r}")
    return cantor_pair(_PROOF_TAGS[type(p)], payload)


def decode_proof(n: int, lang: Language = LNN) -> kernel.Proof | None:
    """Total decoder: None unless n codes a kernel-valid proof tree."""
    from .fol import ArityError

    tag, payload = cantor_unpair(n)
    try:
        if tag == 0:
            f = decode_formula(payload, lang)
            return None if f is None else kernel.Axm(f)
        if tag == 1:
            a, b = cantor_unpair(payload)
            pa, pb = decode_proof(a, lang), decode_proof(b, lang)
            if pa is None or pb is None:
                return None
            return kernel.Mp(pa, pb)
        if tag == 2:
            v, q = cantor_unpair(payload)
            pq = decode_proof(q, lang)
            return None if pq is None else kernel.Gen(v, pq)
        if tag == 3:
            a, b = cantor_unpair(payload)
            fa, fb = decode_formula(a, lang), decode_formula(b, lang)
            if fa is None or fb is None:
                return None
            return kernel.Imp1(fa, fb)
        if tag == 4:
            a, rest = cantor_unpair(payload)
            b, c = cantor_unpair(rest)
            fa, fb, fcf = (
                decode_formula(a, lang),
                decode_formula(b, lang),
                decode_formula(c, lang),
            )
            if fa is None or fb is None or fcf is None:
                return None
            return kernel.Imp2(fa, fb, fcf)
        if tag == 5:
            a, b = cantor_unpair(payload)
            fa, fb = decode_formula(a, lang), decode_formula(b, lang)
            if fa is None or fb is None:
                return None
            return kernel.Cp(fa, fb)
        if tag == 6:
            a, rest = cantor_unpair(payload)
            v, t = cantor_unpair(rest)
            fa = decode_formula(a, lang)
            tt = decode_term(t, lang)
            if fa is None or tt is None:
                return None
            return kernel.Fa1(fa, v, tt)
        if tag == 7:
            a, v = cantor_unpair(payload)
            fa = decode_formula(a, lang)
            return None if fa is None else kernel.Fa2(fa, v)
        if tag == 8:
            a, rest = cantor_unpair(payload)
            b, v = cantor_unpair(rest)
            fa, fb = decode_formula(a, lang), decode_formula(b, lang)
            if fa is None or fb is None:
                return None
            return kernel.Fa3(fa, fb, v)
        if tag == 9:
            return kernel.Eq1() if payload == 0 else None
        if tag == 10:
            return kernel.Eq2() if payload == 0 else None
        if tag == 11:
            return kernel.Eq3() if payload == 0 else None
        if tag == 12:
            if payload >= len(lang.relations):
                return None
            return kernel.Eq4(lang.relations[payload])
        if tag == 13:
            if payload >= len(lang.functions):
                return None
            return kernel.Eq5(lang.functions[payload])
        return None
    except (kernel.IllFormed, ArityError):
        return None


def check_prf(fc: int, pc: int, lang: Language = LNN) -> int:
    """Total proof check on codes.

    Returns 1 + code of the axiom-list codes when ``pc`` codes a valid proof
    whose conclusion codes to ``fc``; 0 in every other case.
    """
    p = decode_proof(pc, lang)
    if p is None:
        return 0
    j = p.judgement
    if code_formula(j.conclusion, lang) != fc:
        return 0
    return 1 + code_list([code_formula(g, lang) for g in j.axioms])
