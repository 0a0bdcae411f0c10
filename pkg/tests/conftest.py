"""Shared randomized-corpus generators.

Everything is seeded by the caller, so the suites are reproducible; sizes
are chosen to keep Gödel codes in the fast range (codes double their bit
length per formula constructor).
"""

from __future__ import annotations

import random

from rosser.arith import LT, PLUS, TIMES, nn_axioms
from rosser.fol import (
    Atomic,
    Equal,
    Forall,
    Imp,
    Not,
    Num,
    SUCC,
    Var,
    ZERO,
    app,
    free_vars_formula,
    free_vars_term,
)
from rosser.kernel import (
    Axm,
    Cp,
    Eq1,
    Eq2,
    Eq3,
    Eq4,
    Eq5,
    Fa1,
    Fa2,
    Fa3,
    Gen,
    Imp1,
    Imp2,
    Mp,
)
from rosser.fol import fresh_var


def make_term(rng: random.Random, depth: int, max_var: int = 4):
    if depth <= 0 or rng.random() < 0.4:
        if rng.random() < 0.7:
            return Var(rng.randrange(max_var))
        return Num(rng.randrange(4))
    f = rng.choice([PLUS, TIMES, SUCC, ZERO])
    return app(f, *(make_term(rng, depth - 1, max_var) for _ in range(f.arity)))


def make_formula(rng: random.Random, depth: int, max_var: int = 4):
    if depth <= 0:
        t1 = make_term(rng, 1, max_var)
        t2 = make_term(rng, 1, max_var)
        if rng.random() < 0.5:
            return Equal(t1, t2)
        return Atomic(LT, (t1, t2))
    kind = rng.randrange(4)
    if kind == 0:
        return Imp(
            make_formula(rng, depth - 1, max_var),
            make_formula(rng, depth - 1, max_var),
        )
    if kind == 1:
        return Not(make_formula(rng, depth - 1, max_var))
    if kind == 2:
        return Forall(rng.randrange(max_var), make_formula(rng, depth - 1, max_var))
    return make_formula(rng, 0, max_var)


def make_closed_formula(rng: random.Random, depth: int, max_var: int = 3):
    f = make_formula(rng, depth, max_var)
    for v in sorted(free_vars_formula(f), reverse=True):
        f = Forall(v, f)
    return f


def make_rename_case(rng: random.Random):
    """A (formula, variable, term) triple on which renaming must fire."""
    j = rng.randrange(3)
    v = (j + 1 + rng.randrange(2)) % 4
    if v == j:
        v = (j + 1) % 4
    # v free in the body, j free in the replacement.
    body_extra = make_formula(rng, rng.randrange(2), 4)
    body = Imp(Equal(Var(v), make_term(rng, 1, 4)), body_extra)
    s = app(PLUS, Var(j), make_term(rng, 1, 3))
    f = Forall(j, body)
    if v not in free_vars_formula(body):
        body = Imp(Equal(Var(v), Var(v)), body)
        f = Forall(j, body)
    assert j in free_vars_term(s) and v in free_vars_formula(body)
    return f, v, s


def make_valid_proof(rng: random.Random, budget: int):
    """A kernel-valid proof tree with roughly ``budget`` rule nodes."""
    if budget <= 1:
        kind = rng.randrange(8)
        if kind == 0:
            return Axm(make_formula(rng, rng.randrange(3)))
        if kind == 1:
            return Imp1(make_formula(rng, 1), make_formula(rng, 1))
        if kind == 2:
            return Imp2(make_formula(rng, 1), make_formula(rng, 1), make_formula(rng, 1))
        if kind == 3:
            return Cp(make_formula(rng, 1), make_formula(rng, 1))
        if kind == 4:
            return rng.choice([Eq1(), Eq2(), Eq3(), Eq4(LT), Eq5(rng.choice([PLUS, SUCC, ZERO]))])
        if kind == 5:
            return Fa1(make_formula(rng, 1), rng.randrange(3), make_term(rng, 1))
        if kind == 6:
            f = make_formula(rng, 1)
            return Fa2(f, fresh_var(free_vars_formula(f)))
        return Fa3(make_formula(rng, 1), make_formula(rng, 1), rng.randrange(3))
    if rng.random() < 0.5:
        # modus ponens against a matching assumption or an Imp1 instance
        minor = make_valid_proof(rng, budget // 2)
        a = minor.conclusion
        if rng.random() < 0.5:
            major = Axm(Imp(a, make_formula(rng, rng.randrange(2))))
        else:
            major = Imp1(a, make_formula(rng, 1))
        return Mp(major, minor)
    premise = make_valid_proof(rng, budget - 1)
    used = set()
    for g in premise.axioms:
        used |= free_vars_formula(g)
    return Gen(fresh_var(used), premise)


def nn_system_member(f):
    axioms = nn_axioms()
    return any(f == a for a in axioms)
