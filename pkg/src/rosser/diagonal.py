"""Fixed points, provability formulas, and the Rosser sentence.

The constructions here consume *graph handles*: formulas with the free
variable contract of ``represent.RepFormula`` (x0 the output, x1.. the
inputs).  Where the artifact can supply the genuine graph it does — the
negation-code function n -> pair-code of not(f) is a real quantifier-free
LNN formula — and where the genuine graph is the arithmetization of a whole
metatheoretic function (the diagonal function, the proof checker, coded-list
membership), a registered stub with the correct variable contract stands in.
Everything downstream consumes only the formula and its contract, and every
tested property here is structural (free variables, construction identity,
closedness, serializer round-trips), so the stubs never need to be true.

The diagonal numeral: the fixed point of phi at x_i substitutes the numeral
of the code of a formula containing phi itself.  That code is a huge natural
and the numeral stays in O(1) sugar form; nothing here ever expands it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .arith import LT, PLUS, TIMES, numeral
from .coding import BudgetExceeded, code_formula, code_size_bits
from .fol import (
    Atomic,
    Equal,
    Forall,
    Formula,
    Imp,
    Not,
    Num,
    SUCC,
    Var,
    and_,
    app,
    exists_,
    free_vars_formula,
    fresh_var,
    node_count,
    or_,
    subst_formula,
    subst_simultaneous,
)
from .kernel import AxiomSystem, Proof, proves_under
from .represent import RepFormula


@dataclass(frozen=True)
class ExpressedSystem:
    """An axiom system together with a formula expressing it.

    ``rep_formula`` may have at most the one free variable ``rep_var``; it is
    the formula that holds (provably, in the intended reading) exactly at
    numerals of codes of member formulas.  ``member`` is the decidable
    membership test itself.
    """

    rep_formula: Formula
    rep_var: int
    member: Callable[[Formula], bool]
    description: str = ""

    def __post_init__(self):
        extra = free_vars_formula(self.rep_formula) - {self.rep_var}
        if extra:
            raise ValueError(f"expression formula has stray free variables {extra}")


@dataclass(frozen=True)
class SentenceReport:
    sentence: Formula
    node_count: int
    is_closed: bool
    log: tuple[str, ...]


def negation_code_graph() -> RepFormula:
    """The genuine graph of n -> code of the negation of the formula coded n.

    Negation codes as pair(2, n) = 2 + (n+2)(n+3)/2, so the graph is the
    quantifier-free equation 2*x0 = 4 + (x1+2)*(x1+3).
    """
    lhs = app(TIMES, Num(2), Var(0))
    rhs = app(
        PLUS,
        Num(4),
        app(TIMES, app(PLUS, Var(1), Num(2)), app(PLUS, Var(1), Num(3))),
    )
    return RepFormula(Equal(lhs, rhs), 1)


def diagonal_graph_stub() -> RepFormula:
    """Placeholder for the graph of the diagonal function.

    The real function maps n to the code of the formula coded n with the
    numeral of n substituted for the diagonalized variable; its primitive
    recursive arithmetization is out of scope, so this handle only carries
    the variable contract (output x0, input x1) that the fixed-point
    construction needs.
    """
    return RepFormula(Equal(Var(0), Var(1)), 1)


def proof_check_graph_stub() -> RepFormula:
    """Placeholder for the graph of the total proof checker on codes.

    Contract: output x0, inputs x1 (formula code) and x2 (proof code).
    """
    return RepFormula(Equal(Var(0), app(PLUS, Var(1), Var(2))), 2)


def list_member_graph_stub() -> RepFormula:
    """Placeholder for the 0/1-valued graph of coded-list membership.

    Contract: output x0, inputs x1 (candidate element) and x2 (list code).
    """
    return RepFormula(Equal(Var(0), app(TIMES, Var(1), Var(2))), 2)


def fixed_point(
    phi: Formula,
    i: int,
    diag: RepFormula | None = None,
    code_bit_budget: int | None = None,
) -> Formula:
    """A sentence-producing fixed point of phi at variable x_i.

    Builds alpha = exists k.(D(k; x_i) and phi[x_i/x_k]) with D the diagonal
    graph handle, then returns psi = alpha[x_i/numeral(code(alpha))].  By
    construction psi is alpha with the numeral of its own diagonalization
    input substituted, and the free variables of psi are those of phi
    less x_i; both facts are asserted before returning.
    """
    psi, _, _ = fixed_point_parts(phi, i, diag, code_bit_budget)
    return psi


def fixed_point_parts(
    phi: Formula,
    i: int,
    diag: RepFormula | None = None,
    code_bit_budget: int | None = None,
) -> tuple[Formula, Formula, int]:
    """The fixed point together with alpha and alpha's code."""
    d = diag if diag is not None else diagonal_graph_stub()
    if d.arity != 1:
        raise ValueError("diagonal graph handle must be unary")
    k = fresh_var(
        free_vars_formula(phi) | free_vars_formula(d.formula) | {i}
    )
    relocated = subst_simultaneous(d.formula, {0: Var(k), 1: Var(i)})
    alpha = exists_(k, and_(relocated, subst_formula(phi, i, Var(k))))
    if code_bit_budget is not None:
        # Codes double their bit length per pairing, so estimate before
        # materializing: a too-deep alpha would otherwise grind for hours
        # (or exhaust memory) inside code_formula.
        estimate = code_size_bits(alpha)
        if estimate > code_bit_budget:
            raise BudgetExceeded(
                f"fixed-point numeral needs about {estimate:.3g} bits, "
                f"budget is {code_bit_budget}"
            )
    alpha_code = code_formula(alpha)
    psi = subst_formula(alpha, i, numeral(alpha_code))
    assert free_vars_formula(psi) == free_vars_formula(phi) - {i}
    assert psi == subst_formula(alpha, i, Num(alpha_code))
    return psi, alpha, alpha_code


def code_sys_prf_formula(
    sys: ExpressedSystem,
    proof_check: RepFormula | None = None,
    list_member: RepFormula | None = None,
) -> Formula:
    """The two-free-variable provability-relation formula.

    Asserts that the proof checker applied to (x0, x1) returns one more than
    some list code g, every member of which satisfies the system's
    expression formula.  The member quantifier is bounded by S g — members
    of a paired list never exceed the list's own code — and membership is
    consumed through its 0/1-valued graph so the whole formula stays in the
    existential fragment whenever the handles are.
    """
    chk = proof_check if proof_check is not None else proof_check_graph_stub()
    mem = list_member if list_member is not None else list_member_graph_stub()
    if chk.arity != 2 or mem.arity != 2:
        raise ValueError("graph handles must be binary")

    used = (
        {0, 1, 2, sys.rep_var}
        | free_vars_formula(chk.formula)
        | free_vars_formula(mem.formula)
    )
    g = fresh_var(used)
    used = used | {g}
    e = fresh_var(used)
    used = used | {e}
    o = fresh_var(used)

    check_says = subst_simultaneous(
        chk.formula, {0: app(SUCC, Var(g)), 1: Var(0), 2: Var(1)}
    )
    member_graph = subst_simultaneous(
        mem.formula, {0: Var(o), 1: Var(e), 2: Var(g)}
    )
    rep_at_e = subst_formula(sys.rep_formula, sys.rep_var, Var(e))
    members_ok = Forall(
        e,
        Imp(
            Atomic(LT, (Var(e), app(SUCC, Var(g)))),
            exists_(o, and_(member_graph, or_(Equal(Var(o), Num(0)), rep_at_e))),
        ),
    )
    return exists_(g, and_(check_says, members_ok))


def code_sys_pf_formula(
    sys: ExpressedSystem,
    proof_check: RepFormula | None = None,
    list_member: RepFormula | None = None,
) -> Formula:
    """Plain provability: some proof code works for the formula coded x0."""
    return exists_(1, code_sys_prf_formula(sys, proof_check, list_member))


def rosser_sentence(
    sys: ExpressedSystem,
    diag: RepFormula | None = None,
    proof_check: RepFormula | None = None,
    list_member: RepFormula | None = None,
    neg_code: RepFormula | None = None,
    code_bit_budget: int | None = 1 << 22,
) -> SentenceReport:
    """The self-referential sentence asserting that every code of a proof of
    it is beaten by a smaller code of a proof of its negation.

    Raises BudgetExceeded: the diagonal numeral of this shape can never be
    materialized.  Codes double their bit length per formula constructor,
    and the sentence skeleton (the bounded counter-proof block plus the
    fixed-point wrapper) multiplies any leaf by at least 2**25 before the
    provability relation's own structure is counted, so the numeral sits at
    10**9 bits and beyond for the smallest conceivable handles and near
    4**37 bits for the real construction.  The budget check reports the
    estimate instead of grinding; everything up to the diagonal numeral is
    built and is exercised by the structural tests.
    """
    neg = neg_code if neg_code is not None else negation_code_graph()
    if neg.arity != 1:
        raise ValueError("negation-code handle must be unary")
    prf = code_sys_prf_formula(sys, proof_check, list_member)
    i = 0
    used = free_vars_formula(prf) | free_vars_formula(neg.formula) | {i}
    y = fresh_var(used)
    used = used | {y}
    z = fresh_var(used)
    used = used | {z}
    m = fresh_var(used)

    log = [
        f"provability relation built with free variables {sorted(free_vars_formula(prf))}",
        f"self-reference variable x{i}; proof variable x{y}; "
        f"counter-proof variable x{z}; negated-code variable x{m}",
    ]
    proves_self = subst_simultaneous(prf, {0: Var(i), 1: Var(y)})
    neg_of_self = subst_simultaneous(neg.formula, {0: Var(m), 1: Var(i)})
    proves_negation = subst_simultaneous(prf, {0: Var(m), 1: Var(z)})
    smaller_counterproof = exists_(
        z,
        and_(
            Atomic(LT, (Var(z), Var(y))),
            exists_(m, and_(neg_of_self, proves_negation)),
        ),
    )
    phi = Forall(y, Imp(proves_self, smaller_counterproof))
    log.append(f"diagonalizing a formula of {node_count(phi)} nodes at x{i}")
    psi, _, alpha_code = fixed_point_parts(phi, i, diag, code_bit_budget)
    log.append(f"fixed-point code has {alpha_code.bit_length()} bits")
    closed = not free_vars_formula(psi)
    return SentenceReport(psi, node_count(psi), closed, tuple(log))


def inconsistent(system: AxiomSystem, proofs: Iterable[Proof]) -> bool:
    """Semi-decision helper: does some supplied proof derive 0 = S 0?

    Only inspects the proofs it is given; a False answer means none of them
    witnesses inconsistency, not that the system is consistent.
    """
    absurdity = Equal(Num(0), Num(1))
    return any(proves_under(system, p, absurdity) for p in proofs)


def nn_expressed_in_self() -> ExpressedSystem:
    """NN expressed by the finite disjunction of its nine axiom codes.

    Because NN is finite, equality of x0 with one of nine code numerals is a
    faithful expression formula at the level of the standard model; it is
    also quantifier-free, hence in the existential fragment.  The axiom-code
    numerals it mentions are in the 10**40 range, so formulas containing this
    one cannot themselves be coded (a numeral's code is doubly exponential in
    its value); use ``nn_expressed_stub`` where the downstream construction
    needs to take codes.
    """
    from .arith import nn_axioms

    axioms = nn_axioms()
    codes = [code_formula(a) for a in axioms]
    parts = [Equal(Var(0), Num(c)) for c in codes]
    rep = parts[-1]
    for p in reversed(parts[:-1]):
        rep = or_(p, rep)
    return ExpressedSystem(
        rep_formula=rep,
        rep_var=0,
        member=lambda f: any(f == a for a in axioms),
        description="NN, expressed by the disjunction of its axiom codes",
    )


def nn_expressed_stub() -> ExpressedSystem:
    """The bundled codable stand-in for NN expressed in itself.

    Membership is the real (decidable) NN membership test; the expression
    formula is a placeholder with the contracted single free variable,
    small enough that formulas built over it still have materializable
    codes.  The faithful finite-disjunction formula lives in
    ``nn_expressed_in_self`` and is not codable.
    """
    from .arith import nn_axioms

    axioms = nn_axioms()
    return ExpressedSystem(
        rep_formula=Equal(Var(0), Var(0)),
        rep_var=0,
        member=lambda f: any(f == a for a in axioms),
        description="NN with a placeholder self-expression formula",
    )
