"""Command-line interface.

Exit codes: 0 success, 1 parse or JSON error, 2 normal-form invariant
violation, 3 descent violation (index printed on stdout), 4 resource cap.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .cnf import Ordering3, compare3
from .convert import m2h, m2t
from .errors import InvariantError, JsonError, ParseError, ResourceLimit
from .mset import render_mset
from .syntax import evaluate, from_json, print_canonical, render_tree, to_json
from .wf import ZeroTailAt, check_strict_trace, sequence_from_prefix, zero_tail

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVARIANT = 2
EXIT_DESCENT = 3
EXIT_RESOURCE = 4


def _read_lines(path: str) -> list[str]:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _cmd_eval(args) -> int:
    value = evaluate(args.expr)
    print(to_json(value) if args.json else print_canonical(value))
    return EXIT_OK


def _cmd_cmp(args) -> int:
    c = compare3(evaluate(args.left), evaluate(args.right))
    print({Ordering3.LESS: "LT", Ordering3.EQUAL: "EQ", Ordering3.GREATER: "GT"}[c])
    return EXIT_OK


def _cmd_convert(args) -> int:
    value = from_json(args.input) if args.source == "json" else evaluate(args.input)
    if args.target == "text":
        print(print_canonical(value))
    elif args.target == "json":
        print(to_json(value))
    elif args.target == "tree":
        print(render_tree(m2t(value).term))
    else:
        print(render_mset(m2h(value)))
    return EXIT_OK


def _cmd_check_desc(args) -> int:
    trace = [evaluate(line) for line in _read_lines(args.file)]
    bad = check_strict_trace(trace)
    if bad is None:
        print("ok")
        return EXIT_OK
    print(bad.i)
    print(f"violation at {bad.i}: {print_canonical(bad.prev)} is not above "
          f"{print_canonical(bad.next)}", file=sys.stderr)
    return EXIT_DESCENT


def _cmd_zero_tail(args) -> int:
    values = [evaluate(line) for line in _read_lines(args.file)]
    if not values:
        print("error: empty sequence file", file=sys.stderr)
        return EXIT_PARSE
    # past the file the last value repeats, so confirming up to len(values) covers everything
    report = zero_tail(sequence_from_prefix(values), confirm=len(values))
    if isinstance(report, ZeroTailAt):
        print(report.n)
        return EXIT_OK
    print(report.i)
    print(f"violation at {report.i}: {print_canonical(report.prev)} then "
          f"{print_canonical(report.next)}", file=sys.stderr)
    return EXIT_DESCENT


def _cmd_selftest(args) -> int:
    from .selftest import run_selftest

    results = run_selftest()
    for name, ok in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cnfordinals", description="Ordinal notations below epsilon_0."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression to normal form")
    p.add_argument("expr")
    p.add_argument("--json", action="store_true", help="print the JSON encoding")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("cmp", help="compare two expressions (LT, EQ or GT)")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_cmp)

    p = sub.add_parser("convert", help="convert between representations")
    p.add_argument("--from", dest="source", choices=["text", "json"], required=True)
    p.add_argument("--to", dest="target", choices=["text", "json", "tree", "mset-debug"],
                   required=True)
    p.add_argument("input")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("check-desc", help="check a trace file is strictly descending")
    p.add_argument("file", help="one expression per line, '-' for stdin")
    p.set_defaults(func=_cmd_check_desc)

    p = sub.add_parser(
        "zero-tail",
        help="find the first zero of a pseudo-descending sequence "
             "(the last line repeats forever)",
    )
    p.add_argument("file", help="one expression per line, '-' for stdin")
    p.set_defaults(func=_cmd_zero_tail)

    p = sub.add_parser("selftest", help="run the worked-example suite")
    p.set_defaults(func=_cmd_selftest)
    return parser


def run_command(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, JsonError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except ResourceLimit as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except RecursionError:
        print("error: DepthExceeded: Python stack exhausted", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def main() -> None:
    sys.exit(run_command())
