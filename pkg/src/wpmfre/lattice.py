"""Solution-set structure: maximum solution, minimal candidates, cells.

The solution set of a feasible system is a finite union of boxes (cells)
that share one global upper corner:

  * Each feasible row ``i`` has a row-maximum solution: the inverse value
    at every active column, 1 at every inert column.  The componentwise
    minimum of the row maxima is the global maximum solution ``x_max``;
    the system is feasible iff ``x_max`` solves it.
  * Each active column ``j`` of row ``i`` yields a row-minimal point:
    the inverse value at position ``j`` and 0 elsewhere.
  * A selector assigns one active column to every row.  Its candidate
    lower corner is the componentwise max of the chosen row-minimal
    points.  The candidate is feasible iff it sits below ``x_max``, in
    which case the whole box up to ``x_max`` consists of solutions, and
    the union of these boxes over all selectors is exactly the solution
    set.

The selector space has ``prod_i |active(i)|`` elements, exponential in the
number of rows, so enumeration is guarded by an explicit budget checked
before any expansion.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    EnumerationBudgetError,
    InactiveColumnError,
    InfeasibleRowError,
)
from .model import Problem, RowClassification, classify_row, row_feasible
from .wpm import CLASSIFY_TOL, wpm_inverse

__all__ = [
    "DEFAULT_CHOICE_LIMIT",
    "MaxSolution",
    "CandidateMinimal",
    "max_solution_row",
    "global_max_solution",
    "max_solution",
    "minimal_solution_row",
    "choice_space_size",
    "enumerate_candidates",
    "feasible_candidates",
]

#: Default ceiling on the number of selector vectors enumerated.
DEFAULT_CHOICE_LIMIT = 10**6


@dataclass(frozen=True)
class MaxSolution:
    """Row maxima stacked as an m x n matrix plus their componentwise min."""

    per_row: np.ndarray
    overall: np.ndarray


@dataclass(frozen=True)
class CandidateMinimal:
    """Lower corner generated by one selector vector.

    ``choice[i]`` is the active column selected for row ``i``; ``point``
    is the componentwise max of the selected row-minimal points; and
    ``feasible`` records whether ``point`` fits under the global maximum
    solution (within ``CLASSIFY_TOL``), i.e. whether its cell is nonempty.
    """

    choice: tuple[int, ...]
    point: np.ndarray
    feasible: bool


def max_solution_row(problem: Problem, cls: RowClassification) -> np.ndarray:
    """Largest point solving row ``cls.row`` alone.

    Inverse value at each active column, 1 at each inert column.  Raises
    :class:`InfeasibleRowError` when the row admits no solution.
    """
    if not row_feasible(cls):
        raise InfeasibleRowError(
            cls.row,
            f"row {cls.row} is infeasible: "
            f"blocking columns {list(cls.blocking)}, "
            f"{len(cls.active)} active columns",
        )
    i = cls.row
    x = np.ones(problem.n)
    for j in cls.active:
        x[j] = wpm_inverse(float(problem.A[i, j]), float(problem.b[i]), problem.params)
    return x


def global_max_solution(per_row: np.ndarray) -> np.ndarray:
    """Componentwise minimum of the stacked row maxima."""
    matrix = np.asarray(per_row, dtype=float)
    return matrix.min(axis=0)


def max_solution(
    problem: Problem, classifications: tuple[RowClassification, ...]
) -> MaxSolution:
    per_row = np.vstack(
        [max_solution_row(problem, cls) for cls in classifications]
    )
    return MaxSolution(per_row=per_row, overall=global_max_solution(per_row))


def minimal_solution_row(problem: Problem, i: int, j: int) -> np.ndarray:
    """Smallest point solving row ``i`` through column ``j`` alone.

    The inverse value at position ``j`` and 0 elsewhere.  ``j`` must be an
    active column of row ``i``.
    """
    cls = classify_row(problem, i)
    if j not in cls.active:
        raise InactiveColumnError(
            f"column {j} is not active in row {i} (active: {list(cls.active)})"
        )
    x = np.zeros(problem.n)
    x[j] = wpm_inverse(float(problem.A[i, j]), float(problem.b[i]), problem.params)
    return x


def choice_space_size(classifications: tuple[RowClassification, ...]) -> int:
    """Number of selector vectors: product of active-column counts."""
    return math.prod(len(cls.active) for cls in classifications)


def enumerate_candidates(
    problem: Problem,
    classifications: tuple[RowClassification, ...],
    limit: int = DEFAULT_CHOICE_LIMIT,
) -> list[CandidateMinimal]:
    """Materialize one candidate per selector vector, in lexicographic order.

    The selector space size is checked against ``limit`` before any
    expansion; a breach raises :class:`EnumerationBudgetError` carrying
    the exact required count.  Every row must be feasible.
    """
    for cls in classifications:
        if not row_feasible(cls):
            raise InfeasibleRowError(cls.row)
    required = choice_space_size(classifications)
    if required > limit:
        raise EnumerationBudgetError(required=required, limit=limit)
    values = {
        (cls.row, j): wpm_inverse(
            float(problem.A[cls.row, j]), float(problem.b[cls.row]), problem.params
        )
        for cls in classifications
        for j in cls.active
    }
    x_max = max_solution(problem, classifications).overall
    out: list[CandidateMinimal] = []
    for choice in itertools.product(*(cls.active for cls in classifications)):
        point = np.zeros(problem.n)
        for i, j in enumerate(choice):
            v = values[(i, j)]
            if v > point[j]:
                point[j] = v
        feasible = bool(np.all(point <= x_max + CLASSIFY_TOL))
        point.setflags(write=False)
        out.append(CandidateMinimal(choice=choice, point=point, feasible=feasible))
    return out


def feasible_candidates(
    candidates: list[CandidateMinimal],
) -> list[CandidateMinimal]:
    """Feasible candidates with duplicate points removed.

    Distinct selectors can generate bit-identical points; the first
    occurrence in lexicographic selector order is kept, so the result is
    deterministic.
    """
    seen: set[bytes] = set()
    out: list[CandidateMinimal] = []
    for cand in candidates:
        if not cand.feasible:
            continue
        key = cand.point.tobytes()
        if key in seen:
            continue
        seen.add(key)
        out.append(cand)
    return out
