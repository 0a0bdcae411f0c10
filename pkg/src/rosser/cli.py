"""Command-line front end.

Exit codes: 0 success, 1 semantic failure (wrong conclusion, non-member
axiom, not a code, arity mismatch at evaluation time, budget exceeded),
2 syntax or arity errors in the input text (reported with line and column).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import coding, diagonal, kernel, primrec, sexpr
from .arith import nn_axioms, pa_axiom_check
from .fol import ArityError, free_vars_formula
from .kernel import AxiomSystem
from .represent import RepFormula


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _system_from_arg(arg: str) -> AxiomSystem:
    if arg == "nn":
        axioms = nn_axioms()
        return AxiomSystem(
            member=lambda f: any(f == a for a in axioms), description="NN"
        )
    if arg == "pa":
        return AxiomSystem(member=pa_axiom_check, description="PA")
    formulas = sexpr.parse_formula_list(_read(arg))
    return AxiomSystem(
        member=lambda f: any(f == a for a in formulas), description=arg
    )


def _cmd_check_proof(args) -> int:
    proof = sexpr.parse_proof(_read(args.proof))
    conclusion = sexpr.parse_formula(_read(args.conclusion))
    system = _system_from_arg(args.system)
    judgement = kernel.check_proof(proof)
    if not (judgement.conclusion == conclusion):
        print(
            "conclusion mismatch: proof derives "
            f"{sexpr.format_formula(judgement.conclusion)}",
            file=sys.stderr,
        )
        return 1
    for idx, axiom in enumerate(judgement.axioms):
        if not system.member(axiom):
            print(
                f"axiom {idx} is not in the system: {sexpr.format_formula(axiom)}",
                file=sys.stderr,
            )
            return 1
    for axiom in judgement.axioms:
        print(sexpr.format_formula(axiom))
    return 0


def _cmd_encode(args) -> int:
    text = _read(args.file)
    if args.kind == "term":
        code = coding.code_term(sexpr.parse_term(text))
    elif args.kind == "formula":
        code = coding.code_formula(sexpr.parse_formula(text))
    else:
        code = coding.code_proof(sexpr.parse_proof(text))
    with sexpr._unlimited_digits():
        print(code)
    return 0


def _cmd_decode(args) -> int:
    with sexpr._unlimited_digits():
        n = int(args.code)
    if n < 0:
        print("not a code", file=sys.stderr)
        return 1
    if args.kind == "term":
        t = coding.decode_term(n)
        out = None if t is None else sexpr.format_term(t)
    elif args.kind == "formula":
        f = coding.decode_formula(n)
        out = None if f is None else sexpr.format_formula(f)
    else:
        p = coding.decode_proof(n)
        out = None if p is None else sexpr.format_proof(p)
    if out is None:
        print("not a code", file=sys.stderr)
        return 1
    print(out)
    return 0


def _cmd_eval_pr(args) -> int:
    expr = sexpr.parse_primrec(_read(args.file))
    try:
        value = primrec.eval_primrec(expr, [int(a) for a in args.args])
    except primrec.ArityMismatch as exc:
        print(str(exc), file=sys.stderr)
        return 1
    with sexpr._unlimited_digits():
        print(value)
    return 0


def _cmd_check_prf(args) -> int:
    with sexpr._unlimited_digits():
        fc = int(args.formula_code)
        pc = int(args.proof_code)
        print(coding.check_prf(fc, pc))
    return 0


def _parse_expressed_system(text: str) -> diagonal.ExpressedSystem:
    top = sexpr._read_all(text)
    if len(top) != 1:
        raise sexpr.ParseError("expected one (expressed-system ...) form", 1, 1)
    node = top[0]
    if sexpr._head(node) != "expressed-system":
        raise sexpr.ParseError(
            "expected (expressed-system ...)", node.line, node.col
        )
    rep_var = None
    rep = None
    axioms = None
    for part in node[1:]:
        head = sexpr._head(part)
        if head == "rep-var":
            rep_var = sexpr._want_nat(part[1])
        elif head == "rep":
            rep = sexpr._formula(part[1], sexpr.LNN)
        elif head == "axioms":
            axioms = [sexpr._formula(f, sexpr.LNN) for f in part[1:]]
        else:
            raise sexpr.ParseError(f"unknown section ({head} ...)", part.line, part.col)
    if rep_var is None or rep is None or axioms is None:
        raise sexpr.ParseError(
            "expressed-system needs rep-var, rep, and axioms", node.line, node.col
        )
    return diagonal.ExpressedSystem(
        rep_formula=rep,
        rep_var=rep_var,
        member=lambda f: any(f == a for a in axioms),
        description="from file",
    )


def _cmd_build_rosser(args) -> int:
    if args.system == "nn-stub":
        system = diagonal.nn_expressed_stub()
    else:
        system = _parse_expressed_system(_read(args.system))
    try:
        report = diagonal.rosser_sentence(
            system, code_bit_budget=args.budget_bits
        )
    except coding.BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 1
    text = sexpr.format_formula(report.sentence)
    Path(args.out).write_text(text + "\n", encoding="utf-8")
    if args.stats:
        print(f"nodes: {report.node_count}")
        frees = sorted(free_vars_formula(report.sentence))
        print(f"free-variables: {frees if frees else 'none'}")
        print(f"bytes: {len(text) + 1}")
        for line in report.log:
            print(f"log: {line}")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="rosser",
        description="first-order proofs, Gödel coding, and diagonal sentences",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-proof", help="check a proof against a system")
    p.add_argument("--proof", required=True)
    p.add_argument("--conclusion", required=True)
    p.add_argument("--system", required=True, help="nn, pa, or a file of formulas")
    p.set_defaults(fn=_cmd_check_proof)

    p = sub.add_parser("encode", help="print the code of a term/formula/proof")
    p.add_argument("--kind", required=True, choices=["term", "formula", "proof"])
    p.add_argument("file")
    p.set_defaults(fn=_cmd_encode)

    p = sub.add_parser("decode", help="print the object a code denotes")
    p.add_argument("--kind", required=True, choices=["term", "formula", "proof"])
    p.add_argument("code")
    p.set_defaults(fn=_cmd_decode)

    p = sub.add_parser("eval-pr", help="evaluate a primitive recursive expression")
    p.add_argument("file")
    p.add_argument("--args", nargs="*", default=[])
    p.set_defaults(fn=_cmd_eval_pr)

    p = sub.add_parser("check-prf", help="run the total proof check on codes")
    p.add_argument("--formula-code", required=True)
    p.add_argument("--proof-code", required=True)
    p.set_defaults(fn=_cmd_check_prf)

    p = sub.add_parser("build-rosser", help="construct the self-referential sentence")
    p.add_argument("--system", required=True, help="nn-stub or an expressed-system file")
    p.add_argument("--out", required=True)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--budget-bits", type=int, default=1 << 22)
    p.set_defaults(fn=_cmd_build_rosser)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except sexpr.ParseError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except (ArityError, kernel.IllFormed, primrec.ArityMismatch) as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
