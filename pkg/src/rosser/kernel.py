"""Hilbert-style proof trees and the structural proof checker.

A proof is a tree whose nodes are the fifteen rules below.  Every node is
checked eagerly: constructing an ill-formed node raises ``IllFormed``, so any
`Proof` value in hand carries a valid ``judgement`` (axiom list + conclusion).

The axiom list is ordered and duplicates matter: modus ponens concatenates
the children's lists, an assumption used twice appears twice.  Set-like
reasoning is layered on top via ``AxiomSystem`` and ``proves_under``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .fol import (
    Atomic,
    Equal,
    Formula,
    Forall,
    FuncSym,
    Imp,
    Not,
    RelSym,
    Term,
    Var,
    app,
    free_vars_formula,
    iff_,
    subst_formula,
)


class IllFormed(ValueError):
    """A proof node violates an arity or side condition."""


@dataclass(frozen=True)
class Judgement:
    axioms: tuple[Formula, ...]
    conclusion: Formula


def eq_axiom_relation(r: RelSym) -> Formula:
    """Equality axiom for a relation symbol.

    x0=x1 => x2=x3 => ... => (R(x0,x2,...) <=> R(x1,x3,...)), with the even
    indices on the left and the odd ones on the right.
    """
    n = r.arity
    left = tuple(Var(2 * i) for i in range(n))
    right = tuple(Var(2 * i + 1) for i in range(n))
    body: Formula = iff_(Atomic(r, left), Atomic(r, right))
    for i in reversed(range(n)):
        body = Imp(Equal(Var(2 * i), Var(2 * i + 1)), body)
    return body


def eq_axiom_function(f: FuncSym) -> Formula:
    """Equality axiom for a function symbol: conclusion is an equation."""
    n = f.arity
    left = app(f, *(Var(2 * i) for i in range(n)))
    right = app(f, *(Var(2 * i + 1) for i in range(n)))
    body: Formula = Equal(left, right)
    for i in reversed(range(n)):
        body = Imp(Equal(Var(2 * i), Var(2 * i + 1)), body)
    return body


class Proof:
    """Base class; subclasses populate ``judgement`` during construction."""

    judgement: Judgement

    @property
    def axioms(self) -> tuple[Formula, ...]:
        return self.judgement.axioms

    @property
    def conclusion(self) -> Formula:
        return self.judgement.conclusion


def _set(obj, **kw):
    for k, v in kw.items():
        object.__setattr__(obj, k, v)


@dataclass(frozen=True)
class Axm(Proof):
    formula: Formula
    judgement: Judgement = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _set(self, judgement=Judgement((self.formula,), self.formula))


@dataclass(frozen=True)
class Mp(Proof):
    implication: Proof
    minor: Proof
    judgement: Judgement = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        c = self.implication.conclusion
        if not isinstance(c, Imp):
            raise IllFormed("modus ponens: first premise is not an implication")
        if not (c.antecedent == self.minor.conclusion):
            raise IllFormed("modus ponens: minor premise does not match antecedent")
        _set(
            self,
            judgement=Judgement(
                self.implication.axioms + self.minor.axioms, c.consequent
            ),
        )


@dataclass(frozen=True)
class Gen(Proof):
    var: int
    premise: Proof
    judgement: Judgement = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        for g in self.premise.axioms:
            if self.var in free_vars_formula(g):
                raise IllFormed(
                    f"generalization: x{self.var} is free in an open assumption"
                )
        _set(
            self,
            judgement=Judgement(
                self.premise.axioms, Forall(self.var, self.premise.conclusion)
            ),
        )


@dataclass(frozen=True)
class Imp1(Proof):
    a: Formula
    b: Formula
    judgement: Judgement = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _set(self, judgement=Judgement((), Imp(self.a, Imp(self.b, self.a))))


@dataclass(frozen=True)
class Imp2(Proof):
    a: Formula
    b: Formula
    c: Formula
    judgement: Judgement = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        conclusion = Imp(Imp(a, Imp(b, c)), Imp(Imp(a, b), Imp(a, c)))
        _set(self, judgement=Judgement((), conclusion))


@dataclass(frozen=True)
class Cp(Proof):
    """Contraposition schema: (~A => ~B) => (B => A)."""

    a: Formula
    b: Formula
    judgement: Judgement = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        conclusion = Imp(Imp(Not(self.a), Not(self.b)), Imp(self.b, self.a))
        _set(self, judgement=Judgement((), conclusion))


@dataclass(frozen=True)
class Fa1(Proof):
    """Instantiation schema: (forall v. A) => A[v/t]."""

    a: Formula
    var: int
    term: Term
    judgement: Judgement = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        conclusion = Imp(
            Forall(self.var, self.a), subst_formula(self.a, self.var, self.term)
        )
        _set(self, judgement=Judgement((), conclusion))


@dataclass(frozen=True)
class Fa2(Proof):
    """Vacuous quantification schema: A => forall v. A, v not free in A."""

    a: Formula
    var: int
    judgement: Judgement = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.var in free_vars_formula(self.a):
            raise IllFormed(f"x{self.var} is free in the body")
        _set(
            self,
            judgement=Judgement((), Imp(self.a, Forall(self.var, self.a))),
        )


@dataclass(frozen=True)
class Fa3(Proof):
    """Distribution schema: forall v.(A=>B) => (forall v.A => forall v.B)."""

    a: Formula
    b: Formula
    var: int
    judgement: Judgement = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        v = self.var
        conclusion = Imp(
            Forall(v, Imp(self.a, self.b)),
            Imp(Forall(v, self.a), Forall(v, self.b)),
        )
        _set(self, judgement=Judgement((), conclusion))


@dataclass(frozen=True)
class Eq1(Proof):
    judgement: Judgement = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _set(self, judgement=Judgement((), Equal(Var(0), Var(0))))


@dataclass(frozen=True)
class Eq2(Proof):
    judgement: Judgement = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        conclusion = Imp(Equal(Var(0), Var(1)), Equal(Var(1), Var(0)))
        _set(self, judgement=Judgement((), conclusion))


@dataclass(frozen=True)
class Eq3(Proof):
    judgement: Judgement = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        conclusion = Imp(
            Equal(Var(0), Var(1)),
            Imp(Equal(Var(1), Var(2)), Equal(Var(0), Var(2))),
        )
        _set(self, judgement=Judgement((), conclusion))


@dataclass(frozen=True)
class Eq4(Proof):
    rel: RelSym
    judgement: Judgement = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _set(self, judgement=Judgement((), eq_axiom_relation(self.rel)))


@dataclass(frozen=True)
class Eq5(Proof):
    func: FuncSym
    judgement: Judgement = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _set(self, judgement=Judgement((), eq_axiom_function(self.func)))


def check_proof(p: Proof) -> Judgement:
    """Judgement derived by a proof tree.

    Validation happens at construction, so this is a lookup; it exists as the
    module's checking entry point and re-raises nothing.
    """
    if not isinstance(p, Proof):
        raise IllFormed(f"not a proof: {p!r}")
    return p.judgement


def _imp_self(phi: Formula) -> Proof:
    # |- phi => phi, the standard three-step derivation.
    step1 = Imp2(phi, Imp(phi, phi), phi)
    step2 = Mp(step1, Imp1(phi, Imp(phi, phi)))
    return Mp(step2, Imp1(phi, phi))


def _syllogism(p_xy: Proof, p_yz: Proof) -> Proof:
    """From proofs of X=>Y and Y=>Z build a proof of X=>Z."""
    c_xy = p_xy.conclusion
    c_yz = p_yz.conclusion
    assert isinstance(c_xy, Imp) and isinstance(c_yz, Imp)
    x, y = c_xy.antecedent, c_xy.consequent
    z = c_yz.consequent
    lift = Mp(Imp1(c_yz, x), p_yz)  # X => (Y => Z), from p_yz's axioms
    distributed = Mp(Imp2(x, y, z), lift)  # (X=>Y) => (X=>Z)
    return Mp(distributed, p_xy)


def deduction(p: Proof, phi: Formula) -> Proof:
    """Discharge phi: from a proof of (Gamma, psi) build (Gamma', phi => psi).

    Gamma' is Gamma with every occurrence of phi removed.  The transformation
    is the usual one: leaves equal to phi become a derivation of phi => phi,
    other subproofs not using phi are weakened in one modus ponens step, and
    MP/GEN nodes are rebuilt from transformed children.
    """
    psi = p.conclusion
    if not any(g == phi for g in p.axioms):
        # phi is not among the open assumptions: weaken.
        return Mp(Imp1(psi, phi), p)
    if isinstance(p, Axm):
        # phi occurs, and an Axm has exactly one assumption, so it IS phi.
        return _imp_self(phi)
    if isinstance(p, Mp):
        d_imp = deduction(p.implication, phi)  # phi => (A => B)
        d_min = deduction(p.minor, phi)  # phi => A
        c = p.implication.conclusion
        assert isinstance(c, Imp)
        distributed = Mp(Imp2(phi, c.antecedent, c.consequent), d_imp)
        return Mp(distributed, d_min)
    if isinstance(p, Gen):
        # phi is an open assumption of the premise, so the original side
        # condition guarantees p.var is not free in phi.
        d = deduction(p.premise, phi)  # phi => A, without phi among axioms
        gen = Gen(p.var, d)  # forall v.(phi => A)
        dist = Mp(Fa3(phi, p.premise.conclusion, p.var), gen)
        vac = Fa2(phi, p.var)  # phi => forall v. phi
        return _syllogism(vac, dist)
    raise IllFormed(f"cannot discharge through {type(p).__name__}")


@dataclass(frozen=True)
class AxiomSystem:
    """A decidable set of formulas: ``member`` always answers yes or no."""

    member: Callable[[Formula], bool]
    description: str = ""


def proves_under(system: AxiomSystem, p: Proof, f: Formula) -> bool:
    """True iff p concludes f using only axioms belonging to the system."""
    j = check_proof(p)
    if not (j.conclusion == f):
        return False
    return all(system.member(g) for g in j.axioms)
