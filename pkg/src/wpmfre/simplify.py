"""Equivalence simplifications that shrink the selector space.

Two rewrites zero out matrix entries without changing the solution set:

  * First rule: every inert entry is set to 0.  An inert column cannot
    reach its row's target at any ``x``, so its coefficient is noise.
  * Second rule: an entry ``A[k, j0]`` active in row ``k`` is set to 0
    when some other row ``i`` also has ``j0`` active with
    ``b[i]**p - b[k]**p < w * (A[i, j0]**p - A[k, j0]**p)``, i.e. row
    ``i`` pins column ``j0`` strictly below the value row ``k`` would
    need, so no solution ever satisfies row ``k`` through ``j0``.

Zeroing an active entry removes it from the row's active set and thus
multiplies down the selector-space size.  Rule-two eligibility is decided
for all pairs against the pre-rule matrix and the zeros are applied in
one batch, which makes the outcome order-independent; the strict
inequality is tested with a ``CLASSIFY_TOL`` margin so knife-edge pairs
are left alone.  The pipeline applies rule one then rule two, once each;
an optional flag repeats the pair until a fixpoint.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfeasibleRowError
from .lattice import choice_space_size
from .model import Problem, RowClassification, classify_all, row_feasible
from .wpm import CLASSIFY_TOL

__all__ = [
    "SimplificationEntry",
    "SimplificationLog",
    "simplify_first",
    "simplify_second",
    "simplify_pipeline",
]


@dataclass(frozen=True)
class SimplificationEntry:
    """One zeroed cell: which rule fired, where, and the value it erased."""

    rule: str  # "first" or "second"
    row: int
    col: int
    old_value: float


@dataclass(frozen=True)
class SimplificationLog:
    """Ordered audit of zeroed cells plus selector-space sizes around them."""

    entries: tuple[SimplificationEntry, ...]
    choices_before: int
    choices_after: int


def _require_all_rows_feasible(
    classifications: tuple[RowClassification, ...],
) -> None:
    for cls in classifications:
        if not row_feasible(cls):
            raise InfeasibleRowError(cls.row)


def simplify_first(
    problem: Problem, classifications: tuple[RowClassification, ...]
) -> tuple[Problem, SimplificationLog]:
    """Zero every inert entry.  Logs only cells that actually change."""
    _require_all_rows_feasible(classifications)
    A = problem.A.copy()
    entries = []
    for cls in classifications:
        for j in cls.inert:
            if A[cls.row, j] != 0.0:
                entries.append(
                    SimplificationEntry("first", cls.row, j, float(A[cls.row, j]))
                )
                A[cls.row, j] = 0.0
    simplified = problem.with_matrix(A)
    log = SimplificationLog(
        entries=tuple(entries),
        choices_before=choice_space_size(classifications),
        choices_after=choice_space_size(classify_all(simplified)),
    )
    return simplified, log


def simplify_second(
    problem: Problem, classifications: tuple[RowClassification, ...]
) -> tuple[Problem, SimplificationLog]:
    """Zero dominated active entries, batch-evaluated on the given matrix."""
    _require_all_rows_feasible(classifications)
    A = problem.A
    w, p = problem.params.w, problem.params.p
    b_pow = problem.b**p
    active = [set(cls.active) for cls in classifications]
    doomed: list[tuple[int, int]] = []
    for k, cls in enumerate(classifications):
        for j0 in cls.active:
            for i in range(problem.m):
                if i == k or j0 not in active[i]:
                    continue
                if b_pow[i] - b_pow[k] < w * (A[i, j0] ** p - A[k, j0] ** p) - CLASSIFY_TOL:
                    doomed.append((k, j0))
                    break
    new_A = A.copy()
    entries = []
    for k, j0 in doomed:
        if new_A[k, j0] != 0.0:
            entries.append(SimplificationEntry("second", k, j0, float(new_A[k, j0])))
            new_A[k, j0] = 0.0
    simplified = problem.with_matrix(new_A)
    log = SimplificationLog(
        entries=tuple(entries),
        choices_before=choice_space_size(classifications),
        choices_after=choice_space_size(classify_all(simplified)),
    )
    return simplified, log


def simplify_pipeline(
    problem: Problem, fixpoint: bool = False
) -> tuple[Problem, SimplificationLog]:
    """Apply the first then the second rule, once each by default.

    With ``fixpoint=True`` the pair is repeated until a full pass changes
    nothing.  The merged log reports the selector-space size before any
    rewriting and after the last one.
    """
    classifications = classify_all(problem)
    _require_all_rows_feasible(classifications)
    before = choice_space_size(classifications)
    entries: list[SimplificationEntry] = []
    current = problem
    while True:
        current, log1 = simplify_first(current, classify_all(current))
        entries.extend(log1.entries)
        current, log2 = simplify_second(current, classify_all(current))
        entries.extend(log2.entries)
        if not fixpoint or (not log1.entries and not log2.entries):
            break
    after = choice_space_size(classify_all(current))
    return current, SimplificationLog(
        entries=tuple(entries), choices_before=before, choices_after=after
    )
