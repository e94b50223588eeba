#!/usr/bin/env python3
"""
wreathcount command line.

    python cli.py exact-power --alpha 1 --beta 2 --group trivial --n-max 5
    python cli.py exact-pairs --n-max 3 --group cyclic:2
    python cli.py compare --mode c --n 100
    python cli.py oracle-verify

Exit codes: 0 success, 1 user error, 2 solver failure, 3 verification mismatch.
"""

import argparse
import sys
from typing import Any, Dict, List, Optional, Sequence

from algebra_core import (
    EquationSpec,
    FiniteGroup,
    cyclic_group,
    load_group_table,
    symmetric_group,
    trivial_group,
)
from asymptotics import (
    C_FORMS,
    a_asymptotic,
    c_asymptotic,
    commutativity_cost,
    commutativity_report,
    elementary_expansion_log_a,
    hayman_radius_guess,
    s_asymptotic,
    verify_gaussian_1d,
    verify_gaussian_2d,
)
from config import get_config
from egf_engine import (
    a_sequence,
    c_exact,
    c_exact_collapsed,
    c_sequence,
    d_sequence,
    exp_transform,
    solution_series,
    solution_series_alpha1,
)
from enhanced_logging import configure_logging, get_enhanced_logger
from error_handler import (
    EXIT_OK,
    EXIT_USER_ERROR,
    GroupValidationError,
    IndexSetSyntaxError,
    PreconditionError,
    VerificationMismatchError,
    handle_errors,
)
from index_set import IndexSet
from oracle import count_commuting_idempotent_pairs, count_power_solutions, idempotent_count_direct
from reports import FORMATS, comparison_row, render, sequence_rows, write_output

logger = get_enhanced_logger("cli")


# ---------- PARSERS ----------
def parse_group(spec: str) -> FiniteGroup:
    """trivial | cyclic:m | symmetric:m | table:path"""
    spec = spec.strip()
    kind, _, arg = spec.partition(":")
    kind = kind.lower()
    if kind == "trivial" and not arg:
        return trivial_group()
    if kind == "table":
        if not arg:
            raise GroupValidationError("table: needs a file path", law="format")
        return load_group_table(arg)
    if kind in ("cyclic", "symmetric"):
        try:
            m = int(arg)
        except ValueError:
            raise GroupValidationError(f"'{spec}': {kind} needs an integer parameter", law="format")
        if m < 1:
            raise GroupValidationError(f"'{spec}': parameter must be positive", law="format")
        return cyclic_group(m) if kind == "cyclic" else symmetric_group(m)
    raise GroupValidationError(
        f"unknown group '{spec}' (expected trivial, cyclic:m, symmetric:m or table:path)", law="format"
    )


class _IndexSetParser:
    """
    term  := "all" | "odd" | "even" | INT "mod" INT [">=" INT] | "{" [INT ("," INT)*] "}"
    terms := term ("," term)*
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, position: Optional[int] = None):
        return IndexSetSyntaxError(message, self.pos if position is None else position)

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_spaces()
        return self.pos >= len(self.text)

    def peek(self, literal: str) -> bool:
        self.skip_spaces()
        return self.text.startswith(literal, self.pos)

    def expect(self, literal: str) -> None:
        if not self.peek(literal):
            raise self.error(f"expected '{literal}'")
        self.pos += len(literal)

    def word(self) -> str:
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected a non-negative integer")
        return int(self.text[start:self.pos])

    def term(self) -> IndexSet:
        self.skip_spaces()
        start = self.pos
        if self.peek("{"):
            self.pos += 1
            members = []
            if not self.peek("}"):
                members.append(self.integer())
                while self.peek(","):
                    self.pos += 1
                    members.append(self.integer())
            self.expect("}")
            return IndexSet.of(members)

        if self.pos < len(self.text) and self.text[self.pos].isalpha():
            name = self.word().lower()
            named = {"all": IndexSet.everything, "odd": IndexSet.odd, "even": IndexSet.even}
            if name not in named:
                raise self.error(f"unknown set name '{name}'", start)
            return named[name]()

        a = self.integer()
        self.skip_spaces()
        keyword_at = self.pos
        if self.word().lower() != "mod":
            raise self.error("expected 'mod'", keyword_at)
        self.skip_spaces()
        q_at = self.pos
        q = self.integer()
        if q == 0:
            raise self.error("modulus must be positive", q_at)
        lower = 0
        if self.peek(">="):
            self.pos += 2
            lower = self.integer()
        return IndexSet.progression(a, q, lower)

    def parse(self) -> IndexSet:
        if self.at_end():
            raise self.error("empty index set")
        result = self.term()
        while not self.at_end():
            self.expect(",")
            result = result | self.term()
        return result


def parse_index_set(spec: str) -> IndexSet:
    """Comma-separated union of all | odd | even | "a mod q [>=l]" | {k1,k2,...}."""
    return _IndexSetParser(spec).parse()


# ---------- COMMANDS ----------
def _equation(args) -> EquationSpec:
    return EquationSpec(args.alpha, args.beta)


def _emit(args, command: str, params: Dict[str, Any], rows: List[Dict[str, Any]], sequences=()) -> int:
    write_output(render(command, params, rows, args.format, sequences), args.out)
    return EXIT_OK


@handle_errors("exact-power")
def cmd_exact_power(args) -> int:
    eq = _equation(args)
    group = parse_group(args.group)
    lam, m = parse_index_set(args.lambda_set), parse_index_set(args.m_set)
    order = args.n_max if args.n_max is not None else args.order
    if args.method == "alpha1":
        if eq.alpha != 1:
            raise PreconditionError("--method alpha1 needs --alpha 1")
        seq = solution_series_alpha1(eq.beta, group, lam, m, order)
    else:
        seq = solution_series(eq, group, lam, m, order)
    params = {"alpha": eq.alpha, "beta": eq.beta, "group": args.group, "lambda": str(lam), "m_set": str(m), "n_max": order}
    return _emit(args, "exact-power", params, sequence_rows(seq), [seq])


@handle_errors("exact-pairs")
def cmd_exact_pairs(args) -> int:
    group = parse_group(args.group)
    order = args.n_max if args.n_max is not None else args.order
    connected = c_sequence(order) if group.order == 1 else d_sequence(order, group)
    total = exp_transform(connected)
    connected_name, total_name = connected.meaning[0], total.meaning[0]
    rows = [
        {"n": n, connected_name: str(connected[n]), total_name: str(total[n])}
        for n in range(order + 1)
    ]
    params = {"group": args.group, "n_max": order}
    return _emit(args, "exact-pairs", params, rows, [connected, total])


@handle_errors("asymptotic-power")
def cmd_asymptotic_power(args) -> int:
    eq = _equation(args)
    group = parse_group(args.group)
    rows = []
    for n in args.n:
        estimate = s_asymptotic(n, eq, group, form=args.form)
        row = comparison_row(n, estimate)
        row["radius"] = estimate.details["radius"]
        if n > 1:
            row["radius_guess"] = hayman_radius_guess(n, eq, group)
        rows.append(row)
    params = {"alpha": eq.alpha, "beta": eq.beta, "group": args.group, "form": args.form}
    return _emit(args, "asymptotic-power", params, rows)


@handle_errors("asymptotic-pairs")
def cmd_asymptotic_pairs(args) -> int:
    group = parse_group(args.group)
    rows = []
    for n in args.n:
        estimate = a_asymptotic(n, group, form=args.form, floor=args.floor)
        row = comparison_row(n, estimate)
        if args.expansions:
            row["elementary_expansion"] = elementary_expansion_log_a(n, group.order)
            row["commutativity_cost"] = commutativity_cost(n)
            row["commutativity_estimators"] = commutativity_report(n, group, floor=args.floor)["estimator_difference"]
        rows.append(row)
    params = {"group": args.group, "form": args.form, "floor": args.floor}
    return _emit(args, "asymptotic-pairs", params, rows)


def _record(rows, mismatches, check: str, n: int, expected: int, actual: int, **params) -> None:
    ok = expected == actual
    row = {"check": check, "n": n, "expected": str(expected), "actual": str(actual), "ok": ok, **params}
    rows.append(row)
    if not ok:
        mismatches.append(row)


@handle_errors("oracle-verify")
def cmd_oracle_verify(args) -> int:
    rows: List[Dict[str, Any]] = []
    mismatches: List[Dict[str, Any]] = []
    equations = [EquationSpec(1, 2), EquationSpec(1, 3), EquationSpec(2, 3)]
    index_sets = [
        (IndexSet.everything(), IndexSet.everything()),
        (IndexSet.odd(), IndexSet.even()),
        (IndexSet.even(), IndexSet.odd()),
    ]
    groups = [(trivial_group(), args.n_max_trivial), (cyclic_group(2), args.n_max_wreath)]

    for group, n_max in groups:
        for eq in equations:
            for lam, m in index_sets:
                series = solution_series(eq, group, lam, m, n_max)
                for n in range(n_max + 1):
                    oracle = count_power_solutions(n, eq, group, lam, m, budget=args.budget, workers=args.workers)
                    _record(rows, mismatches, "power", n, oracle, series[n],
                            equation=str(eq), group=group.name, lam=str(lam), m_set=str(m))

    for group, n_max in groups:
        connected = c_sequence(n_max)
        h = group.order
        totals = a_sequence(n_max, group)
        for n in range(1, n_max + 1):
            _record(rows, mismatches, "pairs_connected", n,
                    count_commuting_idempotent_pairs(n, group, connected_only=True, budget=args.budget),
                    h ** (n - 1) * connected[n], group=group.name)
            _record(rows, mismatches, "pairs_total", n,
                    count_commuting_idempotent_pairs(n, group, connected_only=False, budget=args.budget),
                    totals[n], group=group.name)
        for n in range(1, min(n_max, 5) + 1):
            _record(rows, mismatches, "triple_sum", n, c_exact_collapsed(n), c_exact(n), group=group.name)

    direct = solution_series(EquationSpec(1, 2), trivial_group(), IndexSet.everything(), IndexSet.everything(), args.direct_max)
    for n in range(args.direct_max + 1):
        _record(rows, mismatches, "idempotents_direct", n, idempotent_count_direct(n), direct[n])

    _emit(args, "oracle-verify", {"n_max_trivial": args.n_max_trivial, "n_max_wreath": args.n_max_wreath,
                                  "direct_max": args.direct_max}, rows)
    if mismatches:
        raise VerificationMismatchError(f"{len(mismatches)} of {len(rows)} checks disagree", mismatches)
    logger.info("Oracle verification passed", checks=len(rows))
    return EXIT_OK


@handle_errors("compare")
def cmd_compare(args) -> int:
    group = parse_group(args.group)
    rows = []
    if args.mode == "s":
        eq = _equation(args)
        everything = IndexSet.everything()
        exact = solution_series(eq, group, everything, everything, max(args.n))
        for n in args.n:
            rows.append(comparison_row(n, s_asymptotic(n, eq, group, form=args.form or "theorem"), exact[n]))
    else:
        form = args.form or "saddle"
        if form not in C_FORMS:
            raise PreconditionError(f"--form for mode {args.mode} must be one of {', '.join(C_FORMS)}")
        for n in args.n:
            if args.mode == "c":
                c_value = c_exact(n, workers=args.workers) if args.triple else c_exact_collapsed(n)
                rows.append(comparison_row(n, c_asymptotic(n, form=form, floor=args.floor), c_value))
            else:
                exact = a_sequence(n, group)[n]
                rows.append(comparison_row(n, a_asymptotic(n, group, form=form, floor=args.floor), exact))
    params = {"mode": args.mode, "group": args.group, "form": args.form}
    return _emit(args, "compare", params, rows)


@handle_errors("poisson-check")
def cmd_poisson_check(args) -> int:
    if args.gamma is None:
        check = verify_gaussian_1d(args.alpha, args.beta, args.cutoff)
    else:
        check = verify_gaussian_2d(args.alpha, args.beta, args.gamma, args.cutoff)
    row = {
        "alpha": args.alpha,
        "beta": args.beta,
        "gamma": "" if args.gamma is None else args.gamma,
        "closed_form": check.closed_form,
        "direct_sum": check.direct_sum,
        "relative_discrepancy": check.relative_discrepancy,
    }
    return _emit(args, "poisson-check", {"dimension": 1 if args.gamma is None else 2}, [row])


# ---------- ARGUMENT PARSING ----------
def build_parser() -> argparse.ArgumentParser:
    settings = get_config()

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=settings.output_format)
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--log-level", default=None, help="override WREATH_LOG_LEVEL")
    common.add_argument("--workers", type=int, default=settings.workers)

    equation = argparse.ArgumentParser(add_help=False)
    equation.add_argument("--alpha", type=int, default=1)
    equation.add_argument("--beta", type=int, default=2)

    group = argparse.ArgumentParser(add_help=False)
    group.add_argument("--group", default="trivial", help="trivial | cyclic:m | symmetric:m | table:path")

    series = argparse.ArgumentParser(add_help=False)
    series.add_argument("--n-max", type=int, default=None)
    series.add_argument("--order", type=int, default=settings.series_order, help="series truncation order")

    solver = argparse.ArgumentParser(add_help=False)
    solver.add_argument("--floor", type=float, default=settings.solver_floor, help="smallest n handed to the solver")

    parser = argparse.ArgumentParser(prog="wreathcount", description="Count solutions of X^a = X^b and of X^2=X, Y^2=Y, XY=YX in H wr T_n.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact-power", parents=[common, equation, group, series], help="exact s(n) from the EGF")
    p.add_argument("--lambda", dest="lambda_set", default="all", help="allowed component sizes")
    p.add_argument("--m-set", default="all", help="allowed numbers of components")
    p.add_argument("--method", choices=("general", "alpha1"), default="general")
    p.set_defaults(handler=cmd_exact_power)

    p = sub.add_parser("exact-pairs", parents=[common, group, series], help="exact c(n), b(n) or d(n), a(n)")
    p.set_defaults(handler=cmd_exact_pairs)

    p = sub.add_parser("asymptotic-power", parents=[common, equation, group], help="saddle-point estimate of s(n)")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--form", choices=("theorem", "hayman"), default="theorem")
    p.set_defaults(handler=cmd_asymptotic_power)

    p = sub.add_parser("asymptotic-pairs", parents=[common, group, solver], help="estimate of a(n) at the critical point")
    p.add_argument("--n", type=float, nargs="+", required=True)
    p.add_argument("--form", choices=C_FORMS, default="saddle")
    p.add_argument("--expansions", action="store_true", help="add elementary expansion and commutativity columns")
    p.set_defaults(handler=cmd_asymptotic_pairs)

    p = sub.add_parser("oracle-verify", parents=[common], help="exhaustive small-n equivalence matrix")
    p.add_argument("--n-max-trivial", type=int, default=5)
    p.add_argument("--n-max-wreath", type=int, default=3)
    p.add_argument("--direct-max", type=int, default=300)
    p.add_argument("--budget", type=int, default=settings.oracle_budget)
    p.set_defaults(handler=cmd_oracle_verify)

    p = sub.add_parser("compare", parents=[common, equation, group, solver], help="exact values next to estimates")
    p.add_argument("--mode", choices=("s", "c", "a"), required=True)
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--form", default=None)
    p.add_argument("--triple", action="store_true", help="use the direct triple sum for c(n)")
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("poisson-check", parents=[common], help="Gaussian lattice sums against their closed forms")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--gamma", type=float, default=None, help="given: two-dimensional sum")
    p.add_argument("--cutoff", type=float, default=settings.lattice_cutoff)
    p.set_defaults(handler=cmd_poisson_check)

    return parser


@handle_errors("wreathcount")
def _run(argv: Optional[Sequence[str]]) -> int:
    settings = get_config()
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(
        level=args.log_level or settings.log_level,
        structured=settings.structured_logs,
        log_file=settings.log_file,
    )
    logger.debug("Running command", command=args.command)
    return args.handler(args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        return _run(argv)
    except SystemExit as e:
        # argparse reports usage errors this way
        return EXIT_USER_ERROR if e.code else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
