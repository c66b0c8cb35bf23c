"""Global optimum of a linear cost over the solution set.

A linear objective over a union of boxes that share the upper corner
``x_max`` splits by coefficient sign: negative-cost coordinates want to
sit at the shared top, nonnegative-cost coordinates at the box's own
bottom.  The negative part is therefore optimized by ``x_max`` alone,
and the nonnegative part by scanning the feasible candidate lower
corners for the one minimizing the positive-part cost.  Stitching the
two choices coordinate-by-coordinate stays inside the winning box, so
the assembled point is itself a solution; its membership is re-verified
at runtime instead of trusted.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .errors import EnumerationBudgetError, InfeasibleProblemError, MembershipError
from .lattice import (
    DEFAULT_CHOICE_LIMIT,
    CandidateMinimal,
    enumerate_candidates,
    feasible_candidates,
    max_solution,
)
from .model import Problem, classify_all, row_feasible
from .oracle import check_membership
from .simplify import SimplificationLog, simplify_pipeline
from .wpm import FEASIBILITY_TOL

__all__ = [
    "CostSplit",
    "SolveReport",
    "solve_z2",
    "assemble_optimum",
    "solve",
    "STATUS_OPTIMAL",
    "STATUS_INFEASIBLE",
    "STATUS_BUDGET_EXCEEDED",
]

STATUS_OPTIMAL = "optimal"
STATUS_INFEASIBLE = "infeasible"
STATUS_BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class CostSplit:
    """Sign split of the cost vector: ``positive + negative == c`` exactly."""

    positive: np.ndarray
    negative: np.ndarray

    @classmethod
    def from_costs(cls, c: np.ndarray) -> "CostSplit":
        c_arr = np.asarray(c, dtype=float)
        return cls(
            positive=np.maximum(c_arr, 0.0), negative=np.minimum(c_arr, 0.0)
        )


@dataclass(frozen=True)
class SolveReport:
    """Everything a solve run produced, including diagnostics on failure.

    ``status`` is one of "optimal", "infeasible" or "budget_exceeded".
    ``x_star`` and friends are present only for "optimal"; ``feasible``
    may be True on a budget breach (the feasibility test ran before
    enumeration blew the limit) while the optimum is still unknown.
    """

    status: str
    feasible: bool
    x_max: np.ndarray | None
    x_star: np.ndarray | None
    z_star: float | None
    e_star: tuple[int, ...] | None
    candidates_total: int | None
    candidates_feasible: int | None
    candidates: tuple[CandidateMinimal, ...] | None
    simplification: SimplificationLog | None
    diagnostic: dict | None
    timing_seconds: float


def solve_z2(
    candidates: list[CandidateMinimal], c_positive: np.ndarray
) -> tuple[tuple[int, ...], np.ndarray]:
    """Feasible candidate minimizing the positive-part cost.

    Ties go to the lexicographically smallest selector, which is the
    first one encountered because enumeration is lexicographic.
    """
    best: CandidateMinimal | None = None
    best_cost = float("inf")
    for cand in candidates:
        if not cand.feasible:
            continue
        cost = float(c_positive @ cand.point)
        if cost < best_cost:
            best, best_cost = cand, cost
    if best is None:
        raise InfeasibleProblemError("no feasible candidate lower corner")
    return best.choice, best.point


def assemble_optimum(
    x_max: np.ndarray, x_min_star: np.ndarray, c: np.ndarray
) -> np.ndarray:
    """Stitch the optimum: top corner where cost is negative, bottom otherwise."""
    return np.where(np.asarray(c, dtype=float) < 0.0, x_max, x_min_star)


def solve(
    problem: Problem,
    simplify: bool = True,
    limit: int = DEFAULT_CHOICE_LIMIT,
) -> SolveReport:
    """End-to-end pipeline: classify, test feasibility, simplify, optimize.

    Never raises for infeasible or over-budget instances; those outcomes
    are encoded in the report status and diagnostic.  A membership check
    on the assembled optimum runs against the original, unsimplified
    problem and raises :class:`MembershipError` if it ever fails.
    """
    t0 = time.perf_counter()
    classifications = classify_all(problem)
    for cls in classifications:
        if not row_feasible(cls):
            return SolveReport(
                status=STATUS_INFEASIBLE,
                feasible=False,
                x_max=None,
                x_star=None,
                z_star=None,
                e_star=None,
                candidates_total=None,
                candidates_feasible=None,
                candidates=None,
                simplification=None,
                diagnostic={
                    "reason": "infeasible_row",
                    "row": cls.row,
                    "blocking_columns": list(cls.blocking),
                    "active_columns": list(cls.active),
                },
                timing_seconds=time.perf_counter() - t0,
            )
    x_max = max_solution(problem, classifications).overall
    member, residuals = check_membership(problem, x_max, FEASIBILITY_TOL)
    if not member:
        worst = int(np.argmax(residuals))
        return SolveReport(
            status=STATUS_INFEASIBLE,
            feasible=False,
            x_max=x_max,
            x_star=None,
            z_star=None,
            e_star=None,
            candidates_total=None,
            candidates_feasible=None,
            candidates=None,
            simplification=None,
            diagnostic={
                "reason": "maximum_point_not_solution",
                "residuals": residuals.tolist(),
                "worst_row": worst,
            },
            timing_seconds=time.perf_counter() - t0,
        )
    working = problem
    log: SimplificationLog | None = None
    if simplify:
        working, log = simplify_pipeline(problem)
    working_cls = classify_all(working)
    try:
        candidates = enumerate_candidates(working, working_cls, limit=limit)
    except EnumerationBudgetError as exc:
        return SolveReport(
            status=STATUS_BUDGET_EXCEEDED,
            feasible=True,
            x_max=x_max,
            x_star=None,
            z_star=None,
            e_star=None,
            candidates_total=None,
            candidates_feasible=None,
            candidates=None,
            simplification=log,
            diagnostic={
                "reason": "choice_space_exceeds_limit",
                "required": exc.required,
                "limit": exc.limit,
            },
            timing_seconds=time.perf_counter() - t0,
        )
    distinct = feasible_candidates(candidates)
    split = CostSplit.from_costs(problem.c)
    e_star, x_min_star = solve_z2(distinct, split.positive)
    x_star = assemble_optimum(x_max, x_min_star, problem.c)
    member, residuals = check_membership(problem, x_star, FEASIBILITY_TOL)
    if not member:
        raise MembershipError(
            f"assembled optimum fails membership, residuals {residuals.tolist()}"
        )
    x_star.setflags(write=False)
    return SolveReport(
        status=STATUS_OPTIMAL,
        feasible=True,
        x_max=x_max,
        x_star=x_star,
        z_star=float(problem.c @ x_star),
        e_star=e_star,
        candidates_total=len(candidates),
        candidates_feasible=len(distinct),
        candidates=tuple(candidates),
        simplification=log,
        diagnostic=None,
        timing_seconds=time.perf_counter() - t0,
    )
