"""Command-line driver.

Exit codes: 0 success, 1 infeasible (solve/feasibility/verify/simplify on
an infeasible instance), 2 input error, 3 budget exceeded.  The optional
environment variable WPMFRE_ENUM_LIMIT overrides the default enumeration
budget; an explicit --limit flag wins over both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .errors import (
    BudgetError,
    DimensionError,
    DomainError,
    InfeasibleRowError,
    ParameterDomainError,
    ProblemFormatError,
)
from .io import (
    _log_to_dict,
    generate_instance,
    load_point,
    load_problem,
    problem_dumps,
    report_dumps,
)
from .lattice import DEFAULT_CHOICE_LIMIT, max_solution
from .model import classify_all, row_feasible
from .optimize import STATUS_BUDGET_EXCEEDED, STATUS_OPTIMAL, solve
from .oracle import check_membership
from .simplify import simplify_pipeline
from .wpm import FEASIBILITY_TOL, WpmParams

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3

ENV_LIMIT = "WPMFRE_ENUM_LIMIT"

_INPUT_ERRORS = (
    ProblemFormatError,
    ParameterDomainError,
    DomainError,
    DimensionError,
    OSError,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wpmfre",
        description="Linear optimization over max-weighted-power-mean "
        "relational equalities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve an instance end to end")
    p_solve.add_argument("problem")
    p_solve.add_argument("--no-simplify", action="store_true")
    p_solve.add_argument("--limit", type=int, default=None)
    p_solve.add_argument("--out", default=None)

    p_feas = sub.add_parser("feasibility", help="feasibility check only")
    p_feas.add_argument("problem")

    p_simp = sub.add_parser("simplify", help="print the simplified instance")
    p_simp.add_argument("problem")
    p_simp.add_argument("--fixpoint", action="store_true")

    p_verify = sub.add_parser("verify", help="check a point against an instance")
    p_verify.add_argument("problem")
    p_verify.add_argument("point")
    p_verify.add_argument("--tol", type=float, default=FEASIBILITY_TOL)

    p_gen = sub.add_parser("generate", help="emit a random feasible instance")
    p_gen.add_argument("--rows", type=int, required=True)
    p_gen.add_argument("--cols", type=int, required=True)
    p_gen.add_argument("--w", type=float, default=0.75)
    p_gen.add_argument("--p", type=float, default=3.0)
    p_gen.add_argument("--seed", type=int, default=0)
    return parser


def _resolve_limit(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(ENV_LIMIT)
    if raw is None:
        return DEFAULT_CHOICE_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ProblemFormatError(
            f"{ENV_LIMIT} must be an integer, got {raw!r}"
        ) from None


def _cmd_solve(args: argparse.Namespace) -> int:
    problem = load_problem(args.problem)
    report = solve(
        problem, simplify=not args.no_simplify, limit=_resolve_limit(args.limit)
    )
    if report.status == STATUS_BUDGET_EXCEEDED:
        diag = report.diagnostic or {}
        print(
            f"enumeration budget exceeded: requires {diag.get('required')} "
            f"selector vectors, limit {diag.get('limit')}",
            file=sys.stderr,
        )
        return EXIT_BUDGET
    text = report_dumps(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if report.status == STATUS_OPTIMAL else EXIT_INFEASIBLE


def _cmd_feasibility(args: argparse.Namespace) -> int:
    problem = load_problem(args.problem)
    classifications = classify_all(problem)
    for cls in classifications:
        if not row_feasible(cls):
            offending = [[cls.row, j] for j in cls.blocking]
            print(
                json.dumps(
                    {
                        "feasible": False,
                        "row": cls.row,
                        "blocking_entries": offending,
                        "active_columns": list(cls.active),
                    },
                    indent=2,
                )
            )
            return EXIT_INFEASIBLE
    x_max = max_solution(problem, classifications).overall
    member, residuals = check_membership(problem, x_max, FEASIBILITY_TOL)
    print(
        json.dumps(
            {
                "feasible": member,
                "x_max": x_max.tolist(),
                "residuals": residuals.tolist(),
            },
            indent=2,
        )
    )
    return EXIT_OK if member else EXIT_INFEASIBLE


def _cmd_simplify(args: argparse.Namespace) -> int:
    problem = load_problem(args.problem)
    try:
        simplified, log = simplify_pipeline(problem, fixpoint=args.fixpoint)
    except InfeasibleRowError as exc:
        print(f"cannot simplify: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    print(
        json.dumps(
            {
                "problem": json.loads(problem_dumps(simplified)),
                "log": _log_to_dict(log),
            },
            indent=2,
        )
    )
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    problem = load_problem(args.problem)
    point = load_point(args.point)
    member, residuals = check_membership(problem, point, args.tol)
    print(
        json.dumps(
            {
                "member": member,
                "residuals": residuals.tolist(),
                "max_residual": float(np.max(residuals)),
                "tolerance": args.tol,
            },
            indent=2,
        )
    )
    return EXIT_OK if member else EXIT_INFEASIBLE


def _cmd_generate(args: argparse.Namespace) -> int:
    params = WpmParams(args.w, args.p)
    problem = generate_instance(args.rows, args.cols, params, args.seed)
    print(problem_dumps(problem))
    return EXIT_OK


_COMMANDS = {
    "solve": _cmd_solve,
    "feasibility": _cmd_feasibility,
    "simplify": _cmd_simplify,
    "verify": _cmd_verify,
    "generate": _cmd_generate,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except BudgetError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_BUDGET
    except _INPUT_ERRORS as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
