"""The languages of number theory, their axiom systems, and model checking.

LNT has Plus, Times, Succ, Zero; LNN adds the binary relation LT.  The NN
axiom list (six shared axioms plus three about less-than) is finite; the PA
axioms are the six shared ones plus every closed instance of the induction
schema, so PA is given as a decision procedure rather than a list.

Two evaluators over the standard model:

* ``eval_formula`` is sound and three-valued.  Universal quantifiers scan
  witnesses up to ``bound`` looking for a counterexample and otherwise answer
  Unknown, so a definite answer is always true of the natural numbers.
* ``eval_formula_bounded_domain`` relativizes quantifiers to ``[0, bound]``
  and answers exactly for that finite structure (terms still evaluate in
  full arithmetic).  Useful for heuristic validation of axioms.
"""

from __future__ import annotations

import enum
from typing import Mapping

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
    Term,
    Var,
    SUCC,
    ZERO,
    and_,
    app,
    exists_,
    free_vars_formula,
    or_,
    subst_formula,
    subst_simultaneous,
)

PLUS = FuncSym("Plus", 2)
TIMES = FuncSym("Times", 2)
LT = RelSym("LT", 2)

# Symbol order is normative: the coding module numbers function symbols
# Plus=0, Times=1, Succ=2, Zero=3 and relations LT=0 by position.
LNT = Language(functions=(PLUS, TIMES, SUCC, ZERO), relations=())
LNN = Language(functions=(PLUS, TIMES, SUCC, ZERO), relations=(LT,))


class MissingBinding(KeyError):
    """A free variable had no value in the evaluation environment."""


class TruthValue(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    def __bool__(self):  # pragma: no cover - guard against accidental truthiness
        raise TypeError("three-valued result; compare explicitly")


def numeral(n: int) -> Term:
    """The closed term for n, kept in O(1) sugar form."""
    return Num(n)


def _plus(a: Term, b: Term) -> Term:
    return app(PLUS, a, b)


def _times(a: Term, b: Term) -> Term:
    return app(TIMES, a, b)


def _succ(a: Term) -> Term:
    return app(SUCC, a)


def _lt(a: Term, b: Term) -> Formula:
    return Atomic(LT, (a, b))


x0, x1 = Var(0), Var(1)


def shared_axioms() -> list[Formula]:
    """The six successor/plus/times axioms common to NN and PA."""
    return [
        Forall(0, Not(Equal(_succ(x0), Num(0)))),
        Forall(0, Forall(1, Imp(Equal(_succ(x0), _succ(x1)), Equal(x0, x1)))),
        Forall(0, Equal(_plus(x0, Num(0)), x0)),
        Forall(0, Forall(1, Equal(_plus(x0, _succ(x1)), _succ(_plus(x0, x1))))),
        Forall(0, Equal(_times(x0, Num(0)), Num(0))),
        Forall(
            0,
            Forall(1, Equal(_times(x0, _succ(x1)), _plus(_times(x0, x1), x0))),
        ),
    ]


def nn_axioms() -> list[Formula]:
    """The nine NN axioms, in their standard order."""
    return shared_axioms() + [
        Forall(0, Not(_lt(x0, Num(0)))),
        Forall(
            0,
            Forall(
                1,
                Imp(_lt(x0, _succ(x1)), or_(Equal(x0, x1), _lt(x0, x1))),
            ),
        ),
        Forall(
            0,
            Forall(1, or_(_lt(x0, x1), or_(Equal(x0, x1), _lt(x1, x0)))),
        ),
    ]


def pa_induction(phi: Formula, j: int) -> Formula:
    """The induction axiom for phi at variable j.

    phi[xj/0] => (forall xj.(phi => phi[xj/S xj]) => forall xj.phi), closed
    universally over the free variables of forall xj.phi in ascending order.
    """
    base = subst_formula(phi, j, Num(0))
    step = Forall(j, Imp(phi, subst_formula(phi, j, _succ(Var(j)))))
    body: Formula = Imp(base, Imp(step, Forall(j, phi)))
    closure = sorted(free_vars_formula(Forall(j, phi)), reverse=True)
    for v in closure:
        body = Forall(v, body)
    return body


def _in_language(f: Formula, lang: Language) -> bool:
    def term_ok(t: Term) -> bool:
        match t:
            case Var() | Num():
                return True
            case Apply(func=fn, args=args):
                return lang.has_function(fn) and all(term_ok(a) for a in args)
        return False

    match f:
        case Equal(left=l, right=r):
            return term_ok(l) and term_ok(r)
        case Atomic(rel=r, args=args):
            return lang.has_relation(r) and all(term_ok(a) for a in args)
        case Imp(antecedent=a, consequent=b):
            return _in_language(a, lang) and _in_language(b, lang)
        case Not(body=b):
            return _in_language(b, lang)
        case Forall(body=b):
            return _in_language(b, lang)
    return False


def pa_axiom_check(f: Formula) -> bool:
    """Decide membership in PA.

    PA is the six shared axioms over LNT plus the closed induction instances
    exactly as ``pa_induction`` builds them (closure in ascending order).
    """
    if not _in_language(f, LNT):
        return False
    if any(f == a for a in shared_axioms()):
        return True
    # Strip the universal closure; the schema body is an implication.
    prefix: list[int] = []
    body = f
    while isinstance(body, Forall):
        prefix.append(body.var)
        body = body.body
    if len(set(prefix)) != len(prefix):
        return False
    match body:
        case Imp(
            antecedent=base,
            consequent=Imp(antecedent=step, consequent=Forall(var=j, body=phi)),
        ):
            pass
        case _:
            return False
    if prefix != sorted(free_vars_formula(Forall(j, phi))):
        return False
    if not (base == subst_formula(phi, j, Num(0))):
        return False
    expected_step = Forall(j, Imp(phi, subst_formula(phi, j, _succ(Var(j)))))
    return bool(step == expected_step)


PA_SHARED = shared_axioms()

# Template for translating t0 < t1: (exists x2. x0 + S x2 = x1), with the
# existential spelled through not/forall.
_LT_TEMPLATE: Formula = exists_(
    2, Equal(_plus(Var(0), _succ(Var(2))), Var(1))
)


def lnn_to_lnt(f: Formula) -> Formula:
    """Translate an LNN formula to LNT.

    Structure-preserving except that LT(t0, t1) becomes the simultaneous
    substitution instance (exists x2. x0 + S x2 = x1)[x0/t0, x1/t1]; the
    substitution machinery renames the witness variable when t0 or t1
    mention x2.
    """
    match f:
        case Equal():
            return f
        case Atomic(rel=r, args=args):
            if r == LT:
                t0, t1 = args
                return subst_simultaneous(_LT_TEMPLATE, {0: t0, 1: t1})
            raise ValueError(f"not an LNN relation: {r.name}")
        case Imp(antecedent=a, consequent=b):
            return Imp(lnn_to_lnt(a), lnn_to_lnt(b))
        case Not(body=b):
            return Not(lnn_to_lnt(b))
        case Forall(var=v, body=b):
            return Forall(v, lnn_to_lnt(b))
    raise TypeError(f"not a formula: {f!r}")


def eval_term(t: Term, env: Mapping[int, int]) -> int:
    match t:
        case Num(value=n):
            return n
        case Var(index=i):
            try:
                return env[i]
            except KeyError:
                raise MissingBinding(i) from None
        case Apply(func=fn, args=args):
            vals = [eval_term(a, env) for a in args]
            if fn == PLUS:
                return vals[0] + vals[1]
            if fn == TIMES:
                return vals[0] * vals[1]
            if fn == SUCC:
                return vals[0] + 1
            if fn == ZERO:
                return 0
            raise ValueError(f"cannot evaluate function symbol {fn.name}")
    raise TypeError(f"not a term: {t!r}")


def _not3(v: TruthValue) -> TruthValue:
    if v is TruthValue.TRUE:
        return TruthValue.FALSE
    if v is TruthValue.FALSE:
        return TruthValue.TRUE
    return TruthValue.UNKNOWN


def _imp3(a: TruthValue, b: TruthValue) -> TruthValue:
    if a is TruthValue.FALSE or b is TruthValue.TRUE:
        return TruthValue.TRUE
    if a is TruthValue.TRUE and b is TruthValue.FALSE:
        return TruthValue.FALSE
    return TruthValue.UNKNOWN


def eval_formula(f: Formula, env: Mapping[int, int], bound: int) -> TruthValue:
    """Sound three-valued truth in the standard model.

    Quantifier-free formulas get a definite answer.  A universal quantifier
    is False when a counterexample at most ``bound`` exists and Unknown
    otherwise, so True/False answers never lie about the naturals; raising
    the bound can only turn Unknown into a definite value.
    """
    match f:
        case Equal(left=l, right=r):
            return (
                TruthValue.TRUE
                if eval_term(l, env) == eval_term(r, env)
                else TruthValue.FALSE
            )
        case Atomic(rel=r, args=args):
            if r == LT:
                a, b = (eval_term(t, env) for t in args)
                return TruthValue.TRUE if a < b else TruthValue.FALSE
            raise ValueError(f"cannot evaluate relation symbol {r.name}")
        case Imp(antecedent=a, consequent=b):
            return _imp3(eval_formula(a, env, bound), eval_formula(b, env, bound))
        case Not(body=b):
            return _not3(eval_formula(b, env, bound))
        case Forall(var=v, body=b):
            inner = dict(env)
            for k in range(bound + 1):
                inner[v] = k
                if eval_formula(b, inner, bound) is TruthValue.FALSE:
                    return TruthValue.FALSE
            return TruthValue.UNKNOWN
    raise TypeError(f"not a formula: {f!r}")


def eval_formula_bounded_domain(
    f: Formula, env: Mapping[int, int], bound: int
) -> bool:
    """Exact two-valued truth with quantifiers ranging over [0, bound]."""
    match f:
        case Equal(left=l, right=r):
            return eval_term(l, env) == eval_term(r, env)
        case Atomic(rel=r, args=args):
            if r == LT:
                a, b = (eval_term(t, env) for t in args)
                return a < b
            raise ValueError(f"cannot evaluate relation symbol {r.name}")
        case Imp(antecedent=a, consequent=b):
            return not eval_formula_bounded_domain(
                a, env, bound
            ) or eval_formula_bounded_domain(b, env, bound)
        case Not(body=b):
            return not eval_formula_bounded_domain(b, env, bound)
        case Forall(var=v, body=b):
            inner = dict(env)
            for k in range(bound + 1):
                inner[v] = k
                if not eval_formula_bounded_domain(b, inner, bound):
                    return False
            return True
    raise TypeError(f"not a formula: {f!r}")
