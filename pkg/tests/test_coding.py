import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import make_formula, make_rename_case, make_term, make_valid_proof
from rosser.coding import (
    BudgetExceeded,
    cantor_pair,
    cantor_unpair,
    check_prf,
    check_trace_code,
    code_formula,
    code_list,
    code_numeral_term,
    code_proof,
    code_size_bits,
    code_subst_formula,
    code_term,
    code_trace,
    decode_formula,
    decode_list,
    decode_proof,
    decode_term,
    extract_from_trace,
    trace_bound,
    trace_subst,
)
from rosser.fol import Equal, Forall, Not, Num, SUCC, Var, app, subst_formula
from rosser.kernel import Axm, Gen, Mp, Imp1
from rosser.arith import LT


def test_pairing_examples():
    assert cantor_pair(0, 0) == 0
    assert cantor_pair(1, 2) == 7
    assert cantor_unpair(7) == (1, 2)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**40), st.integers(0, 10**40))
def test_pairing_roundtrip_big(a, b):
    assert cantor_unpair(cantor_pair(a, b)) == (a, b)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**40))
def test_unpairing_roundtrip(n):
    a, b = cantor_unpair(n)
    assert cantor_pair(a, b) == n


def test_pairing_monotonicity():
    for a in range(30):
        for b in range(30):
            p = cantor_pair(a, b)
            assert p >= a and p >= b
            assert cantor_pair(a + 1, b) > p
            assert cantor_pair(a, b + 1) > p


def test_term_codes():
    assert code_term(Var(0)) == 0
    assert code_formula(Equal(Var(0), Var(0))) == 0
    assert code_term(Num(0)) == 14  # pair(4, 0)
    assert code_numeral_term(0) == 14
    assert code_numeral_term(1) == cantor_pair(3, cantor_pair(14, 0))
    # numeral sugar and the unary tower code identically
    assert code_term(app(SUCC, Num(0))) == code_numeral_term(1)


def test_numeral_code_growth_and_budget():
    lengths = [code_numeral_term(k).bit_length() for k in range(7)]
    for k in range(6):
        assert lengths[k + 1] >= 2 * lengths[k] - 4
    with pytest.raises(BudgetExceeded):
        code_numeral_term(50, bit_budget=1000)


def test_decode_roundtrip_random():
    rng = random.Random(3)
    for _ in range(300):
        f = make_formula(rng, rng.randrange(4))
        assert decode_formula(code_formula(f)) == f
        t = make_term(rng, rng.randrange(3))
        assert decode_term(code_term(t)) == t


def test_decoders_are_total():
    # small naturals either decode to something that re-encodes to them or
    # come back as the not-a-code marker
    for n in range(2000):
        f = decode_formula(n)
        if f is not None:
            assert code_formula(f) == n
        t = decode_term(n)
        if t is not None:
            assert code_term(t) == n


def test_decode_golden_values():
    assert decode_formula(0) == Equal(Var(0), Var(0))
    assert decode_formula(5) == Not(Equal(Var(0), Var(0)))


def test_code_list_roundtrip():
    rng = random.Random(9)
    for _ in range(200):
        xs = [rng.randrange(1000) for _ in range(rng.randrange(6))]
        assert decode_list(code_list(xs)) == xs


def test_code_subst_examples():
    fc = code_formula(Equal(Var(0), Var(1)))
    assert code_subst_formula(fc, 1, code_term(Var(0))) == 0
    # identity substitution on rename-free formulas returns the input code
    rng = random.Random(13)
    for _ in range(100):
        f = make_formula(rng, rng.randrange(3))
        c = code_formula(f)
        assert code_subst_formula(c, 2, code_term(Var(2))) == c


def test_code_subst_commuting_square_spec_case():
    f = Forall(0, Equal(Var(0), Var(1)))
    s = app(SUCC, Var(0))
    lhs = code_subst_formula(code_formula(f), 1, code_term(s))
    assert lhs == code_formula(subst_formula(f, 1, s))


def test_code_subst_not_a_code():
    # tag 17 is no relation of LNN
    garbage = cantor_pair(17, 0)
    assert code_subst_formula(garbage, 0, 0) is None
    assert code_subst_formula(0, 0, cantor_pair(9, 5)) is None


def test_trace_examples():
    tr = trace_subst(Equal(Var(0), Var(1)), 1, Var(0))
    c = code_trace(tr)
    assert check_trace_code(c)
    assert extract_from_trace(c) == code_subst_formula(
        code_formula(Equal(Var(0), Var(1))), 1, code_term(Var(0))
    )
    assert check_trace_code(5) is False
    assert extract_from_trace(5) is None


def test_trace_renaming_case():
    f = Forall(0, Equal(Var(0), Var(1)))
    s = app(SUCC, Var(0))
    tr = trace_subst(f, 1, s)
    assert tr.renamed_code is not None
    assert len(tr.children) == 2
    c = code_trace(tr)
    assert check_trace_code(c)
    assert extract_from_trace(c) == code_formula(subst_formula(f, 1, s))


def test_trace_tampering_detected():
    tr = trace_subst(Not(Equal(Var(0), Var(1))), 1, Num(2))
    c = code_trace(tr)
    assert check_trace_code(c)
    assert not check_trace_code(c + 1)


def test_trace_bound_dominates():
    rng = random.Random(21)
    for _ in range(50):
        if rng.random() < 0.3:
            f, v, s = make_rename_case(rng)
        else:
            f = make_formula(rng, rng.randrange(3))
            v = rng.randrange(3)
            s = make_term(rng, rng.randrange(2))
        fc, sc = code_formula(f), code_term(s)
        assert code_trace(trace_subst(f, v, s)) <= trace_bound(fc, v, sc)
    # total on garbage
    assert trace_bound(cantor_pair(17, 0), 0, 0) >= 0


def test_code_size_estimate_is_an_upper_bound():
    rng = random.Random(2)
    for _ in range(100):
        f = make_formula(rng, rng.randrange(4))
        assert code_size_bits(f) >= code_formula(f).bit_length()


def test_proof_codes_roundtrip():
    rng = random.Random(31)
    for _ in range(120):
        p = make_valid_proof(rng, rng.randrange(1, 5))
        n = code_proof(p)
        q = decode_proof(n)
        assert q is not None
        assert q.judgement == p.judgement
        assert code_proof(q) == n


def test_check_prf_examples():
    a = Equal(Var(0), Var(0))
    p = Axm(a)
    assert code_proof(p) == 0
    assert check_prf(code_formula(a), 0) == 2  # 1 + code_list([0])
    assert check_prf(code_formula(Equal(Var(0), Var(1))), 0) == 0


def test_check_prf_rejects_invalid_codes():
    a = Equal(Var(0), Var(0))
    # a GEN node violating its side condition decodes to nothing
    bad = cantor_pair(2, cantor_pair(0, code_proof(Axm(a))))
    assert decode_proof(bad) is None
    assert check_prf(code_formula(Forall(0, a)), bad) == 0


def test_check_prf_axiom_list_content():
    a = Equal(Var(0), Var(0))
    b = Equal(Var(1), Var(1))
    p = Mp(Imp1(a, b), Axm(a))
    got = check_prf(code_formula(p.conclusion), code_proof(p))
    assert got == 1 + code_list([code_formula(a)])
    assert decode_list(got - 1) == [code_formula(a)]
