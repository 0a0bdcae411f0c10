import random

from hypothesis import given, settings, strategies as st

from conftest import make_formula, make_rename_case, make_term
from rosser.arith import PLUS
from rosser.fol import (
    Apply,
    ArityError,
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
    depth,
    free_vars_formula,
    free_vars_term,
    fresh_var,
    subst_formula,
    subst_simultaneous,
    subst_term,
)
from rosser.arith import LT


def test_free_vars_term_examples():
    assert free_vars_term(Var(3)) == {3}
    assert free_vars_term(Num(0)) == set()
    assert free_vars_term(app(ZERO)) == set()
    assert free_vars_term(app(PLUS, Var(0), app(SUCC, Var(0)))) == {0}


def test_free_vars_formula_examples():
    assert free_vars_formula(Equal(Var(0), Var(1))) == {0, 1}
    assert free_vars_formula(Forall(0, Equal(Var(0), Var(1)))) == {1}
    closed = Not(Forall(0, Forall(1, Equal(Var(0), Var(1)))))
    assert free_vars_formula(closed) == set()


def test_depth_examples():
    assert depth(Equal(Var(0), Var(0))) == 0
    assert depth(Forall(0, Equal(Var(0), Var(0)))) == 1
    assert depth(Imp(Not(Equal(Var(0), Var(0))), Equal(Var(1), Var(1)))) == 2


def test_fresh_var_examples():
    assert fresh_var(set()) == 0
    assert fresh_var({0, 1}) == 2
    assert fresh_var({0, 2}) == 1


def test_subst_term_examples():
    assert subst_term(Var(0), 0, Num(0)) == Num(0)
    assert subst_term(Var(1), 0, Num(0)) == Var(1)
    got = subst_term(app(PLUS, Var(0), Var(1)), 1, Var(0))
    assert got == app(PLUS, Var(0), Var(0))


def test_subst_formula_examples():
    # bound-variable rename: k = 2 is the least index outside {0, 1}
    got = subst_formula(Forall(0, Equal(Var(0), Var(1))), 1, app(SUCC, Var(0)))
    assert got == Forall(2, Equal(Var(2), app(SUCC, Var(0))))
    shadowed = Forall(0, Equal(Var(0), Var(0)))
    assert subst_formula(shadowed, 0, Num(0)) == shadowed
    assert subst_formula(Equal(Var(0), Var(1)), 1, Var(0)) == Equal(Var(0), Var(0))


def test_subst_simultaneous_examples():
    swap = subst_simultaneous(Equal(Var(0), Var(1)), {0: Var(1), 1: Var(0)})
    assert swap == Equal(Var(1), Var(0))
    f = Forall(0, Equal(Var(0), Var(1)))
    assert subst_simultaneous(f, {}) == f
    assert subst_simultaneous(f, {1: Var(0)}) == Forall(2, Equal(Var(2), Var(0)))


def test_numeral_sugar_is_observationally_the_unary_tower():
    tower = Apply(SUCC, (Apply(SUCC, (Apply(ZERO, ()),)),))
    assert Num(2) == tower
    assert tower == Num(2)
    assert Num(3) != tower
    assert free_vars_term(tower) == free_vars_term(Num(2))
    # the building helper collapses towers eagerly
    assert isinstance(app(SUCC, Num(5)), Num)


def test_terms_are_not_hashable():
    import pytest

    with pytest.raises(TypeError):
        {Num(0): 1}
    with pytest.raises(TypeError):
        {Apply(SUCC, (Var(0),)): 1}


def test_arity_is_constructor_enforced():
    import pytest

    with pytest.raises(ArityError):
        Apply(PLUS, (Var(0),))
    with pytest.raises(ArityError):
        Atomic(LT, (Var(0),))


_terms = st.recursive(
    st.builds(Var, st.integers(0, 3)) | st.builds(Num, st.integers(0, 2)),
    lambda ch: st.builds(lambda a, b: app(PLUS, a, b), ch, ch)
    | st.builds(lambda a: app(SUCC, a), ch),
    max_leaves=6,
)

_formulas = st.recursive(
    st.builds(Equal, _terms, _terms)
    | st.builds(lambda a, b: Atomic(LT, (a, b)), _terms, _terms),
    lambda ch: st.builds(Imp, ch, ch)
    | st.builds(Not, ch)
    | st.builds(lambda v, f: Forall(v, f), st.integers(0, 3), ch),
    max_leaves=8,
)


@settings(max_examples=200, deadline=None)
@given(_formulas, st.integers(0, 3), _terms)
def test_substitution_free_variable_equation(f, v, s):
    got = free_vars_formula(subst_formula(f, v, s))
    expected = free_vars_formula(f) - {v}
    if v in free_vars_formula(f):
        expected |= free_vars_term(s)
    assert got == expected


@settings(max_examples=200, deadline=None)
@given(_formulas, st.integers(0, 3), _terms)
def test_substitution_preserves_depth(f, v, s):
    assert depth(subst_formula(f, v, s)) == depth(f)


@settings(max_examples=200, deadline=None)
@given(_formulas, st.integers(0, 3), _terms)
def test_single_matches_simultaneous(f, v, s):
    assert subst_formula(f, v, s) == subst_simultaneous(f, {v: s})


def test_identity_substitution_is_identity():
    rng = random.Random(7)
    for _ in range(300):
        f = make_formula(rng, rng.randrange(5))
        v = rng.randrange(4)
        assert subst_formula(f, v, Var(v)) == f


def test_rename_cases_agree_between_single_and_simultaneous():
    rng = random.Random(11)
    for _ in range(300):
        f, v, s = make_rename_case(rng)
        assert subst_formula(f, v, s) == subst_simultaneous(f, {v: s})
        assert depth(subst_formula(f, v, s)) == depth(f)
