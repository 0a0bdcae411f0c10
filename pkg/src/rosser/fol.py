"""First-order syntax over an arbitrary decidable language.

Terms and formulas are immutable trees with named variables (natural-number
indices).  A language is a finite signature: function and relation symbols,
each carrying its arity, so arity safety is enforced at construction time
without threading a language record through every node.

Numeral sugar: ``Num(n)`` stands for the n-fold application of ``SUCC`` over
``ZERO`` and is kept un-expanded so that numerals of astronomically large
naturals stay O(1) in memory.  Every operation treats it by its unary
expansion semantics; in particular ``Num(2) == app(SUCC, app(SUCC, Num(0)))``
holds.  Because that equality cannot be made consistent with cheap hashing,
terms and formulas are unhashable by design: compare with ``==``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Union


class ArityError(ValueError):
    """A symbol was applied to the wrong number of arguments."""


@dataclass(frozen=True)
class FuncSym:
    name: str
    arity: int


@dataclass(frozen=True)
class RelSym:
    name: str
    arity: int


@dataclass(frozen=True)
class Language:
    """A signature: ordered symbol tuples; order is normative for coding."""

    functions: tuple[FuncSym, ...]
    relations: tuple[RelSym, ...]

    def has_function(self, f: FuncSym) -> bool:
        return f in self.functions

    def has_relation(self, r: RelSym) -> bool:
        return r in self.relations


# Canonical numeral-forming symbols.  A language that includes both gets
# numeral sugar; see arith.LNT / arith.LNN.
ZERO = FuncSym("Zero", 0)
SUCC = FuncSym("Succ", 1)


@dataclass(frozen=True)
class Var:
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError(f"variable index must be a natural, got {self.index}")


@dataclass(frozen=True, eq=False)
class Num:
    """Numeral sugar: ``Num(n)`` abbreviates Succ^n(Zero)."""

    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValueError(f"numeral must be a natural, got {self.value}")

    def __eq__(self, other):
        if isinstance(other, Num):
            return self.value == other.value
        if isinstance(other, Apply):
            # Peel the unary spine one constructor at a time.
            if self.value == 0:
                return other.func == ZERO and other.args == ()
            return (
                other.func == SUCC
                and len(other.args) == 1
                and Num(self.value - 1) == other.args[0]
            )
        return NotImplemented

    __hash__ = None  # equal to Apply spines that would hash differently


@dataclass(frozen=True, eq=False)
class Apply:
    func: FuncSym
    args: tuple["Term", ...]

    def __post_init__(self):
        if len(self.args) != self.func.arity:
            raise ArityError(
                f"{self.func.name} expects {self.func.arity} argument(s), "
                f"got {len(self.args)}"
            )

    def __eq__(self, other):
        if isinstance(other, Apply):
            return self.func == other.func and self.args == other.args
        if isinstance(other, Num):
            return other.__eq__(self)
        return NotImplemented

    __hash__ = None


Term = Union[Var, Num, Apply]


def app(f: FuncSym, *args: Term) -> Term:
    """Build an application, collapsing numeral spines to ``Num``.

    This is the preferred constructor: it keeps Succ/Zero towers in the O(1)
    sugar form so the canonical representation is unique in practice.
    """
    if f == ZERO and not args:
        return Num(0)
    if f == SUCC and len(args) == 1 and isinstance(args[0], Num):
        return Num(args[0].value + 1)
    return Apply(f, tuple(args))


@dataclass(frozen=True)
class Equal:
    left: Term
    right: Term


@dataclass(frozen=True)
class Atomic:
    rel: RelSym
    args: tuple[Term, ...]

    def __post_init__(self):
        if len(self.args) != self.rel.arity:
            raise ArityError(
                f"{self.rel.name} expects {self.rel.arity} argument(s), "
                f"got {len(self.args)}"
            )


@dataclass(frozen=True)
class Imp:
    antecedent: "Formula"
    consequent: "Formula"


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: int
    body: "Formula"

    def __post_init__(self):
        if self.var < 0:
            raise ValueError(f"bound variable index must be a natural, got {self.var}")


Formula = Union[Equal, Atomic, Imp, Not, Forall]


# Derived connectives.  The expansions below are fixed once and shared by the
# equality-axiom generators, the representability formulas, and the diagonal
# constructions, which must all agree on them.

def or_(a: Formula, b: Formula) -> Formula:
    return Imp(Not(a), b)


def and_(a: Formula, b: Formula) -> Formula:
    return Not(Imp(a, Not(b)))


def iff_(a: Formula, b: Formula) -> Formula:
    # A <=> B is not((A => B) => not(B => A)), i.e. and_ of both directions.
    return and_(Imp(a, b), Imp(b, a))


def exists_(v: int, body: Formula) -> Formula:
    return Not(Forall(v, Not(body)))


def free_vars_term(t: Term) -> set[int]:
    """Variable indices occurring in a term."""
    match t:
        case Var(index=i):
            return {i}
        case Num():
            return set()
        case Apply(args=args):
            out: set[int] = set()
            for a in args:
                out |= free_vars_term(a)
            return out
    raise TypeError(f"not a term: {t!r}")


def free_vars_formula(f: Formula) -> set[int]:
    """Free variable indices; Forall removes its binder from the body's set."""
    match f:
        case Equal(left=l, right=r):
            return free_vars_term(l) | free_vars_term(r)
        case Atomic(args=args):
            out: set[int] = set()
            for a in args:
                out |= free_vars_term(a)
            return out
        case Imp(antecedent=a, consequent=b):
            return free_vars_formula(a) | free_vars_formula(b)
        case Not(body=b):
            return free_vars_formula(b)
        case Forall(var=v, body=b):
            return free_vars_formula(b) - {v}
    raise TypeError(f"not a formula: {f!r}")


def depth(f: Formula) -> int:
    """Connective nesting depth; substitution preserves it."""
    match f:
        case Equal() | Atomic():
            return 0
        case Imp(antecedent=a, consequent=b):
            return 1 + max(depth(a), depth(b))
        case Not(body=b):
            return 1 + depth(b)
        case Forall(body=b):
            return 1 + depth(b)
    raise TypeError(f"not a formula: {f!r}")


def node_count(f: Formula) -> int:
    match f:
        case Equal() | Atomic():
            return 1
        case Imp(antecedent=a, consequent=b):
            return 1 + node_count(a) + node_count(b)
        case Not(body=b):
            return 1 + node_count(b)
        case Forall(body=b):
            return 1 + node_count(b)
    raise TypeError(f"not a formula: {f!r}")


def fresh_var(exclude: Iterable[int]) -> int:
    """Least natural not in ``exclude``.

    Determinism matters: the code-level substitution in the coding module
    must reproduce exactly this choice for the two routes to agree.
    """
    used = set(exclude)
    return next(k for k in itertools.count() if k not in used)


def subst_term(t: Term, v: int, s: Term) -> Term:
    """Replace every occurrence of Var(v) in t by s."""
    match t:
        case Var(index=i):
            return s if i == v else t
        case Num():
            return t
        case Apply(func=f, args=args):
            new = tuple(subst_term(a, v, s) for a in args)
            if all(n is o for n, o in zip(new, args)):
                return t
            return app(f, *new)
    raise TypeError(f"not a term: {t!r}")


def _subst_terms(ts: tuple[Term, ...], v: int, s: Term) -> tuple[Term, ...]:
    return tuple(subst_term(t, v, s) for t in ts)


def subst_formula(f: Formula, v: int, s: Term) -> Formula:
    """Capture-avoiding substitution of s for the free occurrences of Var(v).

    The quantifier case: ``Forall(j, g)`` is returned unchanged when j = v;
    when j is free in s and v is free in g the bound variable is renamed to
    ``fresh_var({v} | free(g) | free(s) | {j})`` before substituting, and
    otherwise the substitution goes straight into the body.  Renaming only
    when capture can actually happen keeps outputs small.
    """
    match f:
        case Equal(left=l, right=r):
            return Equal(subst_term(l, v, s), subst_term(r, v, s))
        case Atomic(rel=r, args=args):
            return Atomic(r, _subst_terms(args, v, s))
        case Imp(antecedent=a, consequent=b):
            return Imp(subst_formula(a, v, s), subst_formula(b, v, s))
        case Not(body=b):
            return Not(subst_formula(b, v, s))
        case Forall(var=j, body=g):
            if j == v:
                return f
            if j in free_vars_term(s) and v in free_vars_formula(g):
                k = fresh_var({v} | free_vars_formula(g) | free_vars_term(s) | {j})
                renamed = subst_formula(g, j, Var(k))
                return Forall(k, subst_formula(renamed, v, s))
            return Forall(j, subst_formula(g, v, s))
    raise TypeError(f"not a formula: {f!r}")


def subst_simultaneous(f: Formula, env: Mapping[int, Term]) -> Formula:
    """Substitute all mapped variables in one structurally recursive pass.

    Uses the same freshness rule as ``subst_formula`` on capture, so the two
    agree structurally on singleton environments.
    """

    def go_term(t: Term, env: Mapping[int, Term]) -> Term:
        match t:
            case Var(index=i):
                return env.get(i, t)
            case Num():
                return t
            case Apply(func=fn, args=args):
                return app(fn, *(go_term(a, env) for a in args))
        raise TypeError(f"not a term: {t!r}")

    def go(f: Formula, env: Mapping[int, Term]) -> Formula:
        if not env:
            return f
        match f:
            case Equal(left=l, right=r):
                return Equal(go_term(l, env), go_term(r, env))
            case Atomic(rel=r, args=args):
                return Atomic(r, tuple(go_term(a, env) for a in args))
            case Imp(antecedent=a, consequent=b):
                return Imp(go(a, env), go(b, env))
            case Not(body=b):
                return Not(go(b, env))
            case Forall(var=j, body=g):
                body_free = free_vars_formula(g)
                relevant = {
                    w: s for w, s in env.items() if w != j and w in body_free
                }
                if not relevant:
                    return f
                replaced_frees: set[int] = set()
                for s in relevant.values():
                    replaced_frees |= free_vars_term(s)
                if j in replaced_frees:
                    exclude = {j} | body_free | replaced_frees | set(relevant)
                    k = fresh_var(exclude)
                    relevant[j] = Var(k)
                    return Forall(k, go(g, relevant))
                return Forall(j, go(g, relevant))
        raise TypeError(f"not a formula: {f!r}")

    return go(f, dict(env))
