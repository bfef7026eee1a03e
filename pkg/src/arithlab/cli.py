"""Command-line interface.

Subcommands: eval, check, table, findall, prime, binom, pascal, digits.
Results go to stdout, diagnostics to stderr.  Exit codes:

    0   success; every checked statement verified
    1   at least one statement refuted (or a false closed statement)
    2   usage, syntax or worksheet-structure error
    3   evaluation/domain error (negative factorial, bad modulus, ...)

Output is plain text by default; ``--format tsv`` switches every
subcommand to stable tab-separated records with no alignment padding.
"""

from __future__ import annotations

import argparse
import sys
from functools import reduce
from pathlib import Path

from .combinatorics import binom, pascal_row
from .digits import digit_sum, last_digit, to_digits
from .dsl.ast import term_free_vars
from .dsl.checking import CheckResult, bounded_check, find_all_dsl
from .dsl.errors import EvalError, ParseError, WorksheetError
from .dsl.parser import parse_formula, parse_term
from .dsl.evaluator import eval_term
from .dsl.worksheet import parse_worksheet, run_worksheet
from .primality import is_prime
from .residues import ResidueExprError, ResidueSet, intersect, render_table, residue_row

__all__ = ["main", "run"]


def _interval(text: str) -> tuple[int, int]:
    try:
        lo_text, hi_text = text.split(":")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty interval {text!r}")
    return lo, hi


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arithlab",
        description="Exact integer arithmetic workbench: evaluate terms, "
        "check quantified statements on bounded domains, and explore "
        "divisibility, residues, digits and binomials.",
    )
    parser.add_argument(
        "--format",
        choices=("plain", "tsv"),
        default="plain",
        help="output mode (tsv: one tab-separated record per line)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a closed term")
    p.add_argument("term")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("check", help="check a formula or a worksheet file")
    p.add_argument("formula", nargs="?", help="formula text")
    p.add_argument("-f", "--file", help="worksheet file")
    p.add_argument(
        "--domain",
        type=_interval,
        default=(-100, 100),
        metavar="LO:HI",
        help="default interval for unbound variables (default -100:100)",
    )
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("table", help="residue table of expressions mod M")
    p.add_argument("--mod", type=int, required=True, metavar="M")
    p.add_argument("exprs", nargs="+", metavar="EXPR")
    p.add_argument(
        "--image",
        action="store_true",
        help="also print each expression's residue set and their intersection",
    )
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("findall", help="all solutions of a one-variable formula")
    p.add_argument("--range", type=_interval, required=True, metavar="LO:HI")
    p.add_argument("formula")
    p.set_defaults(handler=_cmd_findall)

    p = sub.add_parser("prime", help="primality verdict by trial division")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_prime)

    p = sub.add_parser("binom", help="binomial coefficient")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(handler=_cmd_binom)

    p = sub.add_parser("pascal", help="one row of Pascal's triangle")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_pascal)

    p = sub.add_parser("digits", help="decimal digits and digit-based rules")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_digits)

    return parser


# -- check ----------------------------------------------------------------


def _counterexample_text(result: CheckResult, sep: str = ", ") -> str:
    assert result.counterexample is not None
    if not result.counterexample:
        return "-"
    return sep.join(f"{k} = {v}" for k, v in result.counterexample.items())


def _verdict_plain(result: CheckResult) -> str:
    if result.refuted:
        if result.counterexample:
            return f"refuted: counterexample {_counterexample_text(result)}"
        return "refuted: the closed statement is false"
    if result.domain:
        return f"verified on {result.describe_domain()}"
    return "verified (closed formula)"


def _check_record(name: str, result: CheckResult) -> str:
    domain = result.describe_domain() if result.domain else "-"
    ce = _counterexample_text(result) if result.refuted else "-"
    return "\t".join(
        [
            "check",
            name,
            result.verdict.value,
            domain,
            ce,
            str(result.assignments),
            "-",
        ]
    )


def _cmd_check(args) -> int:
    if (args.formula is None) == (args.file is None):
        print("error: provide exactly one of FORMULA or --file", file=sys.stderr)
        return 2
    if args.formula is not None:
        result = bounded_check(parse_formula(args.formula), args.domain)
        if args.format == "tsv":
            print(_check_record("-", result))
        else:
            print(_verdict_plain(result))
        return 1 if result.refuted else 0

    ws = parse_worksheet(Path(args.file).read_text(encoding="utf-8"))
    outcomes = run_worksheet(ws, args.domain)
    exit_code = 0
    saw = {"parse": False, "eval": False, "refuted": False}
    for outcome in outcomes:
        if outcome.error is not None:
            saw[outcome.error_kind or "eval"] = True
            if args.format == "tsv":
                print(
                    "\t".join(
                        ["check", outcome.name, "error", "-", "-", "-", outcome.error]
                    )
                )
            else:
                print(f"{outcome.name}: error: {outcome.error}")
            continue
        assert outcome.result is not None
        saw["refuted"] = saw["refuted"] or outcome.result.refuted
        if args.format == "tsv":
            print(_check_record(outcome.name, outcome.result))
        else:
            print(f"{outcome.name}: {_verdict_plain(outcome.result)}")
    if saw["parse"]:
        exit_code = 2
    elif saw["eval"]:
        exit_code = 3
    elif saw["refuted"]:
        exit_code = 1
    return exit_code


# -- other subcommands ------------------------------------------------------


def _cmd_eval(args) -> int:
    value = eval_term(parse_term(args.term), {})
    print(f"value\t{value}" if args.format == "tsv" else value)
    return 0


def _set_text(s: ResidueSet) -> str:
    return "{" + ", ".join(str(r) for r in s.members) + "}"


def _cmd_table(args) -> int:
    try:
        rows = []
        for source in args.exprs:
            term = parse_term(source)
            names = sorted(term_free_vars(term))
            if len(names) > 1:
                print(
                    f"error: expression {source!r} has several variables: "
                    + ", ".join(names),
                    file=sys.stderr,
                )
                return 2
            var = names[0] if names else "x"
            rows.append(residue_row(term, var, args.mod))
    except (ResidueExprError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if args.format == "tsv":
        print("\t".join(["header"] + [str(r) for r in range(args.mod)]))
        for row in rows:
            print("\t".join(["row", row.label] + [str(v) for v in row.values]))
    else:
        print(render_table(rows))
    if args.image:
        images = [
            ResidueSet(row.modulus, tuple(sorted(set(row.values)))) for row in rows
        ]
        common = reduce(intersect, images)
        if args.format == "tsv":
            for row, image in zip(rows, images):
                print("\t".join(["image", row.label] + [str(r) for r in image.members]))
            print("\t".join(["intersection"] + [str(r) for r in common.members]))
        else:
            for row, image in zip(rows, images):
                print(f"image({row.label}) = {_set_text(image)}")
            print(f"intersection = {_set_text(common)}")
    return 0


def _cmd_findall(args) -> int:
    formula = parse_formula(args.formula)
    lo, hi = args.range
    try:
        solutions = find_all_dsl(formula, lo, hi)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    if args.format == "tsv":
        for x in solutions:
            print(f"solution\t{x}")
    else:
        print(" ".join(str(x) for x in solutions))
    return 0


def _cmd_prime(args) -> int:
    verdict = is_prime(args.n)
    if verdict.is_prime:
        status, factor = "prime", None
    elif verdict.smallest_factor is not None:
        status, factor = "composite", verdict.smallest_factor
    else:
        status, factor = "not prime", None
    if args.format == "tsv":
        print(
            "\t".join(
                [
                    "prime",
                    str(args.n),
                    status.replace(" ", "-"),
                    "-" if factor is None else str(factor),
                ]
            )
        )
    else:
        print(status if factor is None else f"composite (smallest factor {factor})")
    return 0


def _cmd_binom(args) -> int:
    value = binom(args.n, args.k)
    if args.format == "tsv":
        print(f"binom\t{args.n}\t{args.k}\t{value}")
    else:
        print(value)
    return 0


def _cmd_pascal(args) -> int:
    row = pascal_row(args.n)
    if args.format == "tsv":
        print("\t".join(["pascal", str(args.n)] + [str(v) for v in row]))
    else:
        print(" ".join(str(v) for v in row))
    return 0


def _cmd_digits(args) -> int:
    d = to_digits(args.n)
    two = "yes" if last_digit(d) % 2 == 0 else "no"
    three = "yes" if digit_sum(d) % 3 == 0 else "no"
    if args.format == "tsv":
        print(
            "\t".join(
                [
                    "digits",
                    str(args.n),
                    " ".join(str(x) for x in d),
                    str(digit_sum(d)),
                    str(last_digit(d)),
                    two,
                    three,
                ]
            )
        )
    else:
        print("digits:", " ".join(str(x) for x in d))
        print("digit sum:", digit_sum(d))
        print("last digit:", last_digit(d))
        print("divisible by 2:", two)
        print("divisible by 3:", three)
    return 0


def main(argv: list[str] | None = None) -> int:
    """Entry point; returns the exit code instead of calling sys.exit."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help.
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except (ParseError, WorksheetError, ResidueExprError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except EvalError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except FileNotFoundError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 3


def run() -> None:
    """Console-script wrapper."""
    sys.exit(main())
