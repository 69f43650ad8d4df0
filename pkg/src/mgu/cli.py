"""Command line front end.

Four subcommands over constraint files: solve, measure, trace, and
check-axioms. Results go to stdout (one JSON document with --json where
supported); diagnostics go to stderr. Exit codes: 0 on success, 1 when
unification fails or an axiom check finds a counterexample, 2 on parse,
file, or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .axioms import (
    GenConfig,
    VacuousSuiteError,
    format_reports,
    reports_to_doc,
    run_suite,
    suite_passed,
)
from .constraint import Constraint
from .frontend import ParseError, parse_constraints, print_subst, print_trace, print_type
from .substitution import Substitution
from .unify import Failure, OccursCheck, Success, TraceEvent, measure, unify, unify_traced


class _InputError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code
        self.message = message


def _load(path: str) -> list[Constraint]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _InputError(2, f"error: {exc}") from exc
    try:
        return parse_constraints(text)
    except ParseError as exc:
        raise _InputError(
            2, f"{path}:{exc.line}:{exc.column}: error: {exc.message}"
        ) from exc


def _subst_entries(s: Substitution) -> list[dict]:
    return [{"var": v.name, "type": print_type(t)} for v, t in s.items()]


def _failure_entry(cause: OccursCheck) -> dict:
    return {"variable": cause.variable.name, "term": print_type(cause.term)}


def _occurs_diagnostic(cause: OccursCheck) -> str:
    return f"occurs-check: {cause.variable} in {print_type(cause.term)}"


def _event_entry(e: TraceEvent) -> dict:
    doc: dict = {"rule": e.rule.value}
    if e.head is not None:
        doc["head"] = str(e.head)
    m = e.measure_before
    doc["before"] = [m.uniq_vars, m.arrows, m.length]
    if e.measure_after is not None:
        m = e.measure_after
        doc["after"] = [m.uniq_vars, m.arrows, m.length]
    return doc


def _cmd_solve(args: argparse.Namespace) -> int:
    constraints = _load(args.file)
    out = unify(constraints)
    if isinstance(out, Success):
        if args.json:
            doc = {"outcome": "success", "substitution": _subst_entries(out.subst)}
            print(json.dumps(doc, indent=2))
        else:
            print(print_subst(out.subst))
        return 0
    if args.json:
        doc = {"outcome": "failure", "failure": _failure_entry(out.cause)}
        print(json.dumps(doc, indent=2))
    print(_occurs_diagnostic(out.cause), file=sys.stderr)
    return 1


def _cmd_measure(args: argparse.Namespace) -> int:
    m = measure(_load(args.file))
    print(f"uniq_vars={m.uniq_vars} arrows={m.arrows} len={m.length}")
    return 0


def _cmd_trace(args: argparse.Namespace) -> int:
    outcome, events = unify_traced(_load(args.file))
    if args.json:
        doc: dict = {"outcome": "success" if isinstance(outcome, Success) else "failure"}
        if isinstance(outcome, Success):
            doc["substitution"] = _subst_entries(outcome.subst)
        else:
            doc["failure"] = _failure_entry(outcome.cause)
        doc["trace"] = [_event_entry(e) for e in events]
        print(json.dumps(doc, indent=2))
    else:
        print(print_trace(events))
    if isinstance(outcome, Failure):
        print(_occurs_diagnostic(outcome.cause), file=sys.stderr)
        return 1
    return 0


def _cmd_check_axioms(args: argparse.Namespace) -> int:
    try:
        cfg = GenConfig(
            seed=args.seed,
            max_depth=args.max_depth,
            max_vars=args.max_vars,
            max_len=args.max_len,
            cases=args.cases,
        )
        reports = run_suite(cfg)
    except (ValueError, VacuousSuiteError) as exc:
        raise _InputError(2, f"error: {exc}") from exc
    if args.json:
        print(json.dumps(reports_to_doc(cfg, reports), indent=2))
    else:
        print(format_reports(cfg, reports))
    return 0 if suite_passed(reports) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mgu",
        description="Unify arrow-type constraints and audit the solver's laws.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="unify a constraint file")
    solve.add_argument("file", help="constraint file, one 'type = type' per line")
    solve.add_argument("--json", action="store_true", help="emit a JSON document")
    solve.set_defaults(func=_cmd_solve)

    meas = sub.add_parser("measure", help="print the termination measure of a file")
    meas.add_argument("file", help="constraint file")
    meas.set_defaults(func=_cmd_measure)

    trace = sub.add_parser("trace", help="unify a file, printing every step")
    trace.add_argument("file", help="constraint file")
    trace.add_argument("--json", action="store_true", help="emit a JSON document")
    trace.set_defaults(func=_cmd_trace)

    check = sub.add_parser("check-axioms", help="run the randomized axiom suite")
    check.add_argument("--cases", type=int, default=1000, help="cases per axiom")
    check.add_argument("--seed", type=int, default=0, help="suite seed (64-bit)")
    check.add_argument("--max-depth", type=int, default=4, dest="max_depth")
    check.add_argument("--max-vars", type=int, default=6, dest="max_vars")
    check.add_argument("--max-len", type=int, default=6, dest="max_len")
    check.add_argument("--json", action="store_true", help="emit a JSON document")
    check.set_defaults(func=_cmd_check_axioms)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _InputError as err:
        print(err.message, file=sys.stderr)
        return err.code
