"""Command line calculator and main-number explorer.

Subcommands: eval, cmp, table, mains, selftest.  Exit codes: 0 success,
2 parse error, 3 budget exceeded, 4 value not representable below
epsilon_0.  The TRANSFINITE_BUDGET_BITS environment variable overrides
the default bit cap; explicit --max-bits wins over the variable.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .arithmetic import add, mul, pow_
from .budget import EvalBudget
from .errors import BudgetExceeded, NotRepresentable, OrdinalDomainError, ParseError
from .hyper import hyper, left_hyper, no_left_identity_witness
from .mains import DEFAULT_LATTICE_SPEC, enumerate_main_numbers, is_main_number
from .notation import eval_expr, format_ordinal, parse
from .ordinal import OMEGA, ZERO, compare, from_natural
from .synthesis import distributes, naive_ext, synth

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_UNREPRESENTABLE = 4


def _add_budget_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--sup-samples", type=int, default=None, metavar="K",
                     help="samples taken along a fundamental sequence")
    sub.add_argument("--max-depth", type=int, default=None, metavar="D",
                     help="recursion depth cap")
    sub.add_argument("--max-bits", type=int, default=None, metavar="B",
                     help="bit-length cap for naturals")


def _budget_from(args: argparse.Namespace) -> EvalBudget:
    return EvalBudget.from_env(
        max_depth=getattr(args, "max_depth", None),
        max_bits=getattr(args, "max_bits", None),
        sup_samples=getattr(args, "sup_samples", None),
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="transfinite",
        description="Exact ordinal arithmetic below epsilon_0",
    )
    subs = ap.add_subparsers(dest="command", required=True)

    ev = subs.add_parser("eval", help="parse and evaluate an expression")
    ev.add_argument("expr")
    ev.add_argument("--format", choices=("text", "json"), default="text")
    _add_budget_flags(ev)

    cp = subs.add_parser("cmp", help="compare two expressions")
    cp.add_argument("left")
    cp.add_argument("right")
    _add_budget_flags(cp)

    tb = subs.add_parser("table", help="value table for small naturals")
    tb.add_argument("--op", choices=("H", "L", "S"), required=True)
    tb.add_argument("--index", type=int, required=True, metavar="N")
    tb.add_argument("--rows", type=int, required=True, metavar="A")
    tb.add_argument("--cols", type=int, required=True, metavar="B")
    _add_budget_flags(tb)

    mn = subs.add_parser("mains", help="closure scan below a bound")
    mn.add_argument("--index", type=int, required=True, metavar="I")
    mn.add_argument("--bound", required=True, metavar="EXPR")
    mn.add_argument("--depth", type=int, default=DEFAULT_LATTICE_SPEC[0])
    mn.add_argument("--coeff", type=int, default=DEFAULT_LATTICE_SPEC[1])
    mn.add_argument("--terms", type=int, default=DEFAULT_LATTICE_SPEC[2])
    _add_budget_flags(mn)

    st = subs.add_parser("selftest", help="run the built-in check suite")
    _add_budget_flags(st)

    return ap


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        budget = _budget_from(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    # The bit cap bounds every natural produced, but rendering one can
    # still trip the interpreter's int-to-str guard; lift it to match.
    digits = budget.max_bits // 3 + 16
    if hasattr(sys, "get_int_max_str_digits") and sys.get_int_max_str_digits() < digits:
        sys.set_int_max_str_digits(digits)
    try:
        if args.command == "eval":
            return _cmd_eval(args, budget)
        if args.command == "cmp":
            return _cmd_cmp(args, budget)
        if args.command == "table":
            return _cmd_table(args, budget)
        if args.command == "mains":
            return _cmd_mains(args, budget)
        return _cmd_selftest(budget)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OrdinalDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NotRepresentable as exc:
        print(f"not representable: {exc}", file=sys.stderr)
        return EXIT_UNREPRESENTABLE


def _cmd_eval(args, budget: EvalBudget) -> int:
    value = eval_expr(parse(args.expr), budget)
    print(format_ordinal(value, args.format))
    return EXIT_OK


def _cmd_cmp(args, budget: EvalBudget) -> int:
    left = eval_expr(parse(args.left), budget)
    right = eval_expr(parse(args.right), budget)
    print({-1: "<", 0: "=", 1: ">"}[compare(left, right)])
    return EXIT_OK


def _cmd_table(args, budget: EvalBudget) -> int:
    def cell(a: int, b: int) -> str:
        try:
            if args.op == "H":
                return str(hyper(args.index, a, b, budget))
            if args.op == "L":
                return str(left_hyper(args.index, a, b, budget))
            return str(synth(args.index, from_natural(a), from_natural(b), budget))
        except BudgetExceeded:
            return "!"
        except NotRepresentable:
            return "*"

    rows = [["a\\b"] + [str(b) for b in range(args.cols + 1)]]
    for a in range(args.rows + 1):
        rows.append([str(a)] + [cell(a, b) for b in range(args.cols + 1)])
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        print("  ".join(s.rjust(w) for s, w in zip(r, widths)))
    return EXIT_OK


def _cmd_mains(args, budget: EvalBudget) -> int:
    bound = eval_expr(parse(args.bound), budget)
    report = enumerate_main_numbers(
        args.index, bound,
        lattice_spec=(args.depth, args.coeff, args.terms),
        budget=budget,
    )
    print(json.dumps(report.json_dict(), indent=2))
    return EXIT_OK


def _cmd_selftest(budget: EvalBudget) -> int:
    w = OMEGA
    n2, n3 = from_natural(2), from_natural(3)
    failures = 0

    def check(label, got, want) -> None:
        nonlocal failures
        ok = got == want
        failures += 0 if ok else 1
        status = "ok  " if ok else "FAIL"
        print(f"{status} {label}: {got}" + ("" if ok else f" (wanted {want})"))

    check("H(2,7,9)", hyper(2, 7, 9, budget), 63)
    check("H(3,2,10)", hyper(3, 2, 10, budget), 1024)
    check("H(4,3,3)", hyper(4, 3, 3, budget), 7625597484987)
    check("H(4,2,3) vs L(4,2,3)",
          (hyper(4, 2, 3, budget), left_hyper(4, 2, 3, budget)), (16, 1))
    for e in (0, 1, 2, 10):
        a = no_left_identity_witness(e)
        check(f"left-identity witness e={e}", e ** a != a, True)

    check("1 + w", add(from_natural(1), w), w)
    check("2 * w", mul(n2, w), w)
    check("w * 2", mul(w, n2), add(w, w))
    check("2 ^ w", pow_(n2, w, budget), w)
    check("0 ^ w", pow_(ZERO, w, budget), from_natural(1))

    agree = all(
        synth(n, from_natural(a), from_natural(b), budget)
        == from_natural(hyper(n, a, b, budget))
        for n in (1, 2, 3) for a in range(5) for b in range(5)
    ) and all(
        synth(4, from_natural(a), from_natural(b), budget)
        == from_natural(hyper(4, a, b, budget))
        for a in range(3) for b in range(3)
    )
    check("ladder agrees with hyperoperations on naturals", agree, True)

    check("S(2,w,w)", synth(2, w, w, budget), pow_(w, n2, budget))
    check("S(4,2,w+1)", synth(4, n2, add(w, from_natural(1)), budget),
          pow_(w, n2, budget))
    check("S(3,w,w^2)", synth(3, w, pow_(w, n2, budget), budget),
          pow_(w, pow_(w, n2, budget), budget))
    check("N(2,3,w*2) collapses", naive_ext(2, n3, mul(w, n2), budget),
          naive_ext(2, n3, w, budget))
    check("fold vs direct at (4,2,w+1)",
          distributes(4, n2, add(w, from_natural(1)), budget).agrees, True)

    verdict = is_main_number(1, mul(w, n2), budget=budget)
    check("w*2 refuted with witness", verdict.main, False)
    if verdict.witness is not None:
        a, b = verdict.witness
        check("witness re-verifies", synth(1, a, b, budget) >= mul(w, n2), True)

    report = enumerate_main_numbers(1, pow_(w, n3, budget), budget=budget)
    check("infinite mains below w^3",
          [str(x) for x in report.confirmed_infinite], ["w", "w^2", "w^3"])
    check("conjecture rows match", report.all_match, True)

    if failures:
        print(f"FAIL: {failures} check(s) failed")
        return 1
    print("pass: all checks succeeded")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
