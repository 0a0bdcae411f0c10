"""A symbolic-logic kernel: first-order syntax and Hilbert proofs over
decidable languages, the arithmetic theories NN and PA with bounded model
checking, Gödel coding with code-level substitution and a total proof
checker, primitive recursive expressions with beta-function
representability, and the fixed-point / self-referential sentence
constructions, plus an S-expression CLI.
"""

from .arith import (
    LNN,
    LNT,
    LT,
    PLUS,
    TIMES,
    MissingBinding,
    TruthValue,
    eval_formula,
    eval_formula_bounded_domain,
    lnn_to_lnt,
    nn_axioms,
    numeral,
    pa_axiom_check,
    pa_induction,
)
from .coding import (
    BudgetExceeded,
    cantor_pair,
    cantor_unpair,
    check_prf,
    check_trace_code,
    code_formula,
    code_list,
    code_numeral_term,
    code_proof,
    code_subst_formula,
    code_term,
    code_trace,
    decode_formula,
    decode_proof,
    decode_term,
    extract_from_trace,
    trace_bound,
    trace_subst,
)
from .diagonal import (
    ExpressedSystem,
    SentenceReport,
    fixed_point,
    code_sys_pf_formula,
    code_sys_prf_formula,
    inconsistent,
    nn_expressed_in_self,
    nn_expressed_stub,
    rosser_sentence,
)
from .fol import (
    Apply,
    ArityError,
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
    depth,
    free_vars_formula,
    free_vars_term,
    fresh_var,
    node_count,
    subst_formula,
    subst_simultaneous,
    subst_term,
)
from .kernel import (
    AxiomSystem,
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
    IllFormed,
    Imp1,
    Imp2,
    Judgement,
    Mp,
    Proof,
    check_proof,
    deduction,
    eq_axiom_function,
    eq_axiom_relation,
    proves_under,
)
from .primrec import (
    ArityMismatch,
    Compose,
    LengthMismatch,
    NotCoprime,
    PrimRec,
    PrimRecExpr,
    Proj,
    SuccF,
    ZeroF,
    arity,
    beta,
    beta_encode,
    bounded_search,
    const_nat,
    course_of_values,
    crt,
    eval_primrec,
)
from .represent import (
    RepFormula,
    represent,
    sigma1_check,
    verify_instance,
    witness_bound,
)

__version__ = "0.1.0"
