import random

import pytest

from rosser.arith import LT, TruthValue, lnn_to_lnt
from rosser.fol import (
    Atomic,
    Equal,
    Forall,
    Num,
    SUCC,
    Var,
    app,
    free_vars_formula,
)
from rosser.primrec import (
    ArityMismatch,
    Compose,
    PrimRec,
    Proj,
    SuccF,
    ZeroF,
    add_expr,
    cpair_expr,
    eval_primrec,
    mul_expr,
    pred_expr,
    truncated_sub_expr,
)
from rosser.represent import (
    represent,
    sigma1_check,
    verify_instance,
    witness_bound,
)

CORPUS = [
    ("succ", SuccF()),
    ("zero", ZeroF()),
    ("proj", Proj(2, 1)),
    ("add", add_expr()),
    ("mul", mul_expr()),
    ("pred", pred_expr()),
    ("tsub", truncated_sub_expr()),
    ("cpair", cpair_expr()),
]


def test_base_case_formulas():
    assert represent(SuccF()).formula == Equal(Var(0), app(SUCC, Var(1)))
    assert represent(ZeroF()).formula == Equal(Var(0), Num(0))
    assert represent(Proj(2, 1)).formula == Equal(Var(0), Var(2))


def test_free_variable_discipline():
    for _, e in CORPUS:
        rep = represent(e)
        assert free_vars_formula(rep.formula) <= set(range(rep.arity + 1))


def test_sigma1_audit():
    for _, e in CORPUS:
        assert sigma1_check(represent(e).formula)


def test_sigma1_examples():
    assert not sigma1_check(Forall(0, Equal(Var(0), Var(0))))
    assert sigma1_check(lnn_to_lnt(Atomic(LT, (Var(0), Var(1)))))
    # a bounded universal in the fixed shape passes
    from rosser.fol import Imp

    bounded = Forall(0, Imp(Atomic(LT, (Var(0), Var(1))), Equal(Var(0), Var(0))))
    assert sigma1_check(bounded)
    # unbounded shapes under the skeleton do not
    assert not sigma1_check(Forall(0, Imp(Equal(Var(0), Var(0)), Equal(Var(0), Var(0)))))


def test_succ_instances():
    rep = represent(SuccF())
    assert verify_instance(rep, [4], 5, 10) is TruthValue.TRUE
    assert verify_instance(rep, [4], 6, 10) is TruthValue.FALSE


def test_add_instance_with_witness_bound():
    add = add_expr()
    rep = represent(add)
    bound = witness_bound(add, [2, 3])
    assert verify_instance(rep, [2, 3], 5, bound) is TruthValue.TRUE
    assert verify_instance(rep, [2, 3], 6, bound) is not TruthValue.TRUE


def test_witness_bound_examples():
    assert witness_bound(SuccF(), [4]) >= 5
    add = add_expr()
    # the bound must cover the beta pair encoding the value sequence
    from rosser.primrec import beta_encode

    x, _ = beta_encode([3, 4, 5])
    assert witness_bound(add, [2, 3]) >= x


def test_witness_bound_arity():
    with pytest.raises(ArityMismatch):
        witness_bound(add_expr(), [1])
    with pytest.raises(ArityMismatch):
        verify_instance(represent(add_expr()), [1], 1, 10)


def test_instance_truth_and_uniqueness_small_corpus():
    rng = random.Random(4)
    for _, e in CORPUS:
        from rosser.primrec import arity

        n = arity(e)
        for _ in range(4):
            args = [rng.randrange(9) for _ in range(n)]
            value = eval_primrec(e, args)
            rep = represent(e)
            bound = witness_bound(e, args)
            assert verify_instance(rep, args, value, bound) is TruthValue.TRUE
            assert verify_instance(rep, args, value + 1, bound) is not TruthValue.TRUE


def test_insufficient_bound_gives_unknown_not_false_positive():
    add = add_expr()
    rep = represent(add)
    # bound 3 cannot cover the beta witnesses
    assert verify_instance(rep, [2, 3], 5, 3) is TruthValue.UNKNOWN


def test_composed_expression_instances():
    # double(x) = x + x through composition
    double = Compose(1, (Proj(1, 0), Proj(1, 0)), add_expr())
    rep = represent(double)
    assert sigma1_check(rep.formula)
    bound = witness_bound(double, [6])
    assert verify_instance(rep, [6], 12, bound) is TruthValue.TRUE
    assert verify_instance(rep, [6], 13, bound) is not TruthValue.TRUE
