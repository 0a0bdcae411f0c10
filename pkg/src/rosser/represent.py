"""Arithmetic formulas representing primitive recursive functions.

``represent`` maps an expression of arity n to an LNN formula whose free
variables sit among x0..xn, with x0 the output and x1..xn the inputs.  The
construction keeps every unbounded quantifier existential (checkable with
``sigma1_check``):

* successor, zero, projection: plain equations;
* composition: existentially quantified intermediate-value variables, the
  component representations conjoined with the head's;
* primitive recursion: a beta-function pair (u, v) encodes the whole value
  sequence.  "beta(u, v, i) = r" is spelled
      r < 1 + S(i)*v  and  exists q. u = q*(1 + S(i)*v) + r,
  and the formula asserts the sequence starts at the base case, obeys the
  step relation below the recursion argument (a bounded universal written
  as forall w. w < x1 => ...), and ends at the output.

Instances are verified semantically over the naturals.  A literal bounded
scan of the existentials is hopeless (the beta witnesses run to 1e9 and
far beyond even for small arguments, and the scan cost is bound^#quantifiers),
so ``verify_instance`` walks the formula with witnesses replayed from the
defining computation: every existential is instantiated with its computed
witness (rejected as Unknown if it exceeds the caller's bound, so a True
answer is one the bounded scan semantics would eventually confirm), bounded
universals are scanned exactly, and leaves go to the three-valued evaluator.
True is therefore only returned for instances genuinely true in the standard
model; a failed check yields Unknown rather than a claimed refutation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import LT, PLUS, TIMES, TruthValue, eval_formula, eval_term
from .fol import (
    Apply,
    Atomic,
    Equal,
    Forall,
    Formula,
    Imp,
    Not,
    Num,
    SUCC,
    Term,
    Var,
    and_,
    app,
    exists_,
    free_vars_term,
    fresh_var,
    subst_simultaneous,
)
from .primrec import (
    ArityMismatch,
    Compose,
    PrimRec,
    PrimRecExpr,
    Proj,
    SuccF,
    ZeroF,
    arity,
    beta_encode,
    eval_primrec,
)


@dataclass(frozen=True)
class RepFormula:
    formula: Formula
    arity: int
    expr: PrimRecExpr | None = None


def _and_chain(parts: list[Formula]) -> Formula:
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = and_(p, out)
    return out


def _beta_modulus(index: Term, pair_y: int) -> Term:
    # 1 + S(index) * y
    return app(PLUS, Num(1), app(TIMES, app(SUCC, index), Var(pair_y)))


def _beta_eq(pair_x: int, pair_y: int, index: Term, value: Term, q: int) -> Formula:
    """beta(x, y, index) = value, as an LNN formula with witness variable q."""
    modulus = _beta_modulus(index, pair_y)
    division = Equal(
        Var(pair_x), app(PLUS, app(TIMES, Var(q), modulus), value)
    )
    return and_(Atomic(LT, (value, modulus)), exists_(q, division))


def represent(e: PrimRecExpr) -> RepFormula:
    """A formula whose graph is the function e computes."""
    n = arity(e)
    match e:
        case SuccF():
            return RepFormula(Equal(Var(0), app(SUCC, Var(1))), 1, e)
        case ZeroF():
            return RepFormula(Equal(Var(0), Num(0)), 0, e)
        case Proj(m=m):
            return RepFormula(Equal(Var(0), Var(m + 1)), n, e)
        case Compose(gs=gs, h=h):
            m = len(gs)
            used = set(range(max(n, m) + 1))
            zs: list[int] = []
            for _ in range(m):
                z = fresh_var(used)
                used.add(z)
                zs.append(z)
            parts = [
                subst_simultaneous(represent(g).formula, {0: Var(z)})
                for g, z in zip(gs, zs)
            ]
            head = subst_simultaneous(
                represent(h).formula, {j + 1: Var(zs[j]) for j in range(m)}
            )
            body = _and_chain(parts + [head])
            for z in reversed(zs):
                body = exists_(z, body)
            return RepFormula(body, n, e)
        case PrimRec(g=g, h=h):
            inner_n = e.n  # arity of g; e has arity inner_n + 1
            used = set(range(inner_n + 3))
            u = fresh_var(used); used.add(u)
            v = fresh_var(used); used.add(v)
            w = fresh_var(used); used.add(w)
            a = fresh_var(used); used.add(a)
            b = fresh_var(used); used.add(b)
            q = fresh_var(used); used.add(q)
            r0 = fresh_var(used); used.add(r0)

            shift = {j + 1: Var(j + 2) for j in range(inner_n)}
            base_rep = subst_simultaneous(
                represent(g).formula, {0: Var(r0), **shift}
            )
            step_rep = subst_simultaneous(
                represent(h).formula,
                {0: Var(b), 1: Var(w), 2: Var(a),
                 **{j + 3: Var(j + 2) for j in range(inner_n)}},
            )
            base = exists_(
                r0, and_(_beta_eq(u, v, Num(0), Var(r0), q), base_rep)
            )
            step_body = exists_(
                a,
                exists_(
                    b,
                    _and_chain(
                        [
                            _beta_eq(u, v, Var(w), Var(a), q),
                            _beta_eq(u, v, app(SUCC, Var(w)), Var(b), q),
                            step_rep,
                        ]
                    ),
                ),
            )
            step = Forall(w, Imp(Atomic(LT, (Var(w), Var(1))), step_body))
            final = _beta_eq(u, v, Var(1), Var(0), q)
            body = _and_chain([base, step, final])
            return RepFormula(exists_(u, exists_(v, body)), n, e)
    raise TypeError(f"not a primitive recursive expression: {e!r}")


def _quantifier_free(f: Formula) -> bool:
    match f:
        case Equal() | Atomic():
            return True
        case Imp(antecedent=a, consequent=b):
            return _quantifier_free(a) and _quantifier_free(b)
        case Not(body=b):
            return _quantifier_free(b)
        case Forall():
            return False
    raise TypeError(f"not a formula: {f!r}")


def _peel_exists(f: Formula):
    match f:
        case Not(body=Forall(var=v, body=Not(body=g))):
            return v, g
    return None


def _split_and(f: Formula):
    match f:
        case Not(body=Imp(antecedent=a, consequent=Not(body=b))):
            return a, b
    return None


def sigma1_check(f: Formula) -> bool:
    """Recognize the fixed sigma-1 skeleton.

    Recurses through the exists / and / or shapes (with exists spelled as
    not-forall-not); a universal quantifier is only allowed in the bounded
    form forall v. (v < t => body) with v not occurring in t.  Everything
    quantifier-free passes.
    """
    if _quantifier_free(f):
        return True
    ex = _peel_exists(f)
    if ex is not None:
        return sigma1_check(ex[1])
    conj = _split_and(f)
    if conj is not None:
        return sigma1_check(conj[0]) and sigma1_check(conj[1])
    match f:
        case Imp(antecedent=Not(body=a), consequent=b):
            return sigma1_check(a) and sigma1_check(b)
        case Forall(
            var=v, body=Imp(antecedent=Atomic(rel=r, args=(Var(index=g), t)), consequent=body)
        ) if r == LT and g == v and v not in free_vars_term(t):
            return sigma1_check(body)
    return False


def _replay(e: PrimRecExpr, args: tuple[int, ...]):
    """Value of e at args plus every existential witness its formula needs."""
    match e:
        case SuccF():
            return args[0] + 1, []
        case ZeroF():
            return 0, []
        case Proj(m=m):
            return args[m], []
        case Compose(gs=gs, h=h):
            wits: list[int] = []
            mids: list[int] = []
            for g in gs:
                val, ws = _replay(g, args)
                mids.append(val)
                wits.extend(ws)
            out, ws = _replay(h, tuple(mids))
            return out, wits + mids + ws
        case PrimRec(g=g, h=h):
            x, ys = args[0], args[1:]
            val0, wits = _replay(g, ys)
            seq = [val0]
            for k in range(x):
                val, ws = _replay(h, (k, seq[k]) + ys)
                seq.append(val)
                wits.extend(ws)
            bx, by = beta_encode(seq)
            quotients = [bx // (1 + (i + 1) * by) for i in range(len(seq))]
            return seq[x], wits + seq + [bx, by] + quotients
    raise TypeError(f"not a primitive recursive expression: {e!r}")


def witness_bound(e: PrimRecExpr, args) -> int:
    """A bound at least as large as every witness verify_instance plugs in."""
    if len(args) != arity(e):
        raise ArityMismatch(
            f"expression of arity {arity(e)} applied to {len(args)} argument(s)"
        )
    value, wits = _replay(e, tuple(args))
    return max([value, *args, *wits], default=0) + 1


def _check_beta(bf: Formula, env: dict, bound: int) -> TruthValue:
    conj = _split_and(bf)
    if conj is None:
        raise ValueError("formula does not match its beta construction")
    lt_atom, ex = conj
    if eval_formula(lt_atom, env, bound) is not TruthValue.TRUE:
        return TruthValue.UNKNOWN
    peeled = _peel_exists(ex)
    if peeled is None:
        raise ValueError("formula does not match its beta construction")
    qvar, eq = peeled
    # u = q*M + r: solve for the quotient and check the division numerically.
    match eq:
        case Equal(
            left=u_t,
            right=Apply(func=pf, args=(Apply(func=tf, args=(_, m_t)), r_t)),
        ) if pf == PLUS and tf == TIMES:
            pass
        case _:
            raise ValueError("formula does not match its beta construction")
    uv = eval_term(u_t, env)
    rv = eval_term(r_t, env)
    mv = eval_term(m_t, env)
    if uv < rv or (uv - rv) % mv != 0:
        return TruthValue.UNKNOWN
    qv = (uv - rv) // mv
    if qv > bound:
        return TruthValue.UNKNOWN
    inner = dict(env)
    inner[qvar] = qv
    return eval_formula(eq, inner, bound)


def _guided(
    e: PrimRecExpr,
    f: Formula,
    env: dict,
    ins: tuple[int, ...],
    out: int,
    bound: int,
) -> TruthValue:
    match e:
        case SuccF() | ZeroF() | Proj():
            return eval_formula(f, env, bound)
        case Compose(gs=gs, h=h):
            mids = tuple(eval_primrec(g, ins) for g in gs)
            if any(m > bound for m in mids):
                return TruthValue.UNKNOWN
            cur = f
            zs = []
            for _ in gs:
                peeled = _peel_exists(cur)
                if peeled is None:
                    raise ValueError("formula does not match its construction")
                z, cur = peeled
                zs.append(z)
            env2 = dict(env)
            env2.update(zip(zs, mids))
            parts = []
            for _ in range(len(gs)):
                conj = _split_and(cur)
                if conj is None:
                    raise ValueError("formula does not match its construction")
                part, cur = conj
                parts.append(part)
            for g, part, mid in zip(gs, parts, mids):
                if _guided(g, part, env2, ins, mid, bound) is not TruthValue.TRUE:
                    return TruthValue.UNKNOWN
            return _guided(h, cur, env2, mids, out, bound)
        case PrimRec(g=g, h=h):
            x, ys = ins[0], ins[1:]
            seq = [eval_primrec(g, ys)]
            for k in range(x):
                seq.append(eval_primrec(h, (k, seq[k]) + ys))
            bx, by = beta_encode(seq)
            if max(bx, by) > bound or any(s > bound for s in seq):
                return TruthValue.UNKNOWN
            peeled = _peel_exists(f)
            if peeled is None:
                raise ValueError("formula does not match its construction")
            u, cur = peeled
            peeled = _peel_exists(cur)
            if peeled is None:
                raise ValueError("formula does not match its construction")
            v, cur = peeled
            env2 = dict(env)
            env2[u], env2[v] = bx, by
            conj = _split_and(cur)
            if conj is None:
                raise ValueError("formula does not match its construction")
            base_f, rest = conj
            conj = _split_and(rest)
            if conj is None:
                raise ValueError("formula does not match its construction")
            step_f, final_f = conj

            # base: exists r0. beta(u,v,0)=r0 and G(r0; ys)
            peeled = _peel_exists(base_f)
            if peeled is None:
                raise ValueError("formula does not match its construction")
            r0, base_body = peeled
            env3 = dict(env2)
            env3[r0] = seq[0]
            conj = _split_and(base_body)
            if conj is None:
                raise ValueError("formula does not match its construction")
            b0, g_rep = conj
            if _check_beta(b0, env3, bound) is not TruthValue.TRUE:
                return TruthValue.UNKNOWN
            if _guided(g, g_rep, env3, ys, seq[0], bound) is not TruthValue.TRUE:
                return TruthValue.UNKNOWN

            # step: forall w. w < x1 => exists a b. betas and H
            match step_f:
                case Forall(var=w, body=Imp(consequent=step_body)):
                    pass
                case _:
                    raise ValueError("formula does not match its construction")
            for wv in range(x):
                env3 = dict(env2)
                env3[w] = wv
                peeled = _peel_exists(step_body)
                if peeled is None:
                    raise ValueError("formula does not match its construction")
                av, cur2 = peeled
                peeled = _peel_exists(cur2)
                if peeled is None:
                    raise ValueError("formula does not match its construction")
                bv, cur2 = peeled
                env3[av], env3[bv] = seq[wv], seq[wv + 1]
                conj = _split_and(cur2)
                if conj is None:
                    raise ValueError("formula does not match its construction")
                beta_a, rest2 = conj
                conj = _split_and(rest2)
                if conj is None:
                    raise ValueError("formula does not match its construction")
                beta_b, h_rep = conj
                if _check_beta(beta_a, env3, bound) is not TruthValue.TRUE:
                    return TruthValue.UNKNOWN
                if _check_beta(beta_b, env3, bound) is not TruthValue.TRUE:
                    return TruthValue.UNKNOWN
                guided = _guided(
                    h, h_rep, env3, (wv, seq[wv]) + ys, seq[wv + 1], bound
                )
                if guided is not TruthValue.TRUE:
                    return TruthValue.UNKNOWN

            return _check_beta(final_f, env2, bound)
    raise TypeError(f"not a primitive recursive expression: {e!r}")


def verify_instance(rep: RepFormula, args, value: int, bound: int) -> TruthValue:
    """Check the representation formula at concrete inputs and output.

    Substitutes numerals for the inputs and the output, then evaluates the
    formula with computation-replayed witnesses for the existentials, every
    one checked against ``bound`` (see the module docstring for why a naive
    bounded scan is not run).  ``witness_bound`` supplies a sufficient bound.
    """
    if rep.expr is None:
        raise ValueError("verify_instance needs the originating expression")
    if len(args) != rep.arity:
        raise ArityMismatch(
            f"formula of arity {rep.arity} applied to {len(args)} argument(s)"
        )
    env = {0: value}
    env.update({i + 1: a for i, a in enumerate(args)})
    return _guided(rep.expr, rep.formula, env, tuple(args), value, bound)
