"""Staged free (projective) extension of an incidence structure.

One stage works breadth-first: it adds, simultaneously, a meet point for
every parallel line pair of the previous stage and (in FULL mode) a
joining line for every unjoined point pair of the previous stage.  Every
element added at a stage has incidence degree exactly two at birth.

FULL is the default: adding meets only leaves generated points forever
unjoined, so the limit would fail the unique-join axiom.  MEETS_ONLY is
kept for literal single-rule experiments.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import List, Optional

from . import terms as T
from .axioms import parallel_pairs, unjoined_pairs
from .errors import BudgetError
from .structure import IncidenceStructure

DEFAULT_BUDGET = 100_000


class ExtensionMode(enum.Enum):
    MEETS_ONLY = "meets"
    FULL = "full"

    @classmethod
    def parse(cls, text: str) -> "ExtensionMode":
        for mode in cls:
            if text in (mode.value, mode.name.lower()):
                return mode
        raise ValueError(f"unknown extension mode {text!r}")


@dataclass
class ExtensionTrace:
    stages: List[IncidenceStructure]
    mode: ExtensionMode
    budget: int
    requested: int
    stopped_reason: Optional[str] = None  # None | "fixed_point" | "budget"
    fixed_point_stage: Optional[int] = None
    truncated: bool = False

    def stage_sizes(self):
        return [(len(s.points), len(s.lines)) for s in self.stages]


def extend_once(
    S: IncidenceStructure,
    mode: ExtensionMode = ExtensionMode.FULL,
    budget: Optional[int] = None,
) -> IncidenceStructure:
    """One breadth-first extension stage over the pairs present in S."""
    stage = S.max_stage() + 1
    new_points = []
    new_inc = list(S.incidence)
    for l, m in parallel_pairs(S):
        t = T.meet(S.term[l], S.term[m], stage=stage)
        new_points.append(t)
        new_inc.append((t.name, l))
        new_inc.append((t.name, m))
    new_lines = []
    if mode is ExtensionMode.FULL:
        for p, q in unjoined_pairs(S):
            t = T.join(S.term[p], S.term[q], stage=stage)
            new_lines.append(t)
            new_inc.append((p, t.name))
            new_inc.append((q, t.name))
    total = S.element_count() + len(new_points) + len(new_lines)
    if budget is not None and total > budget:
        raise BudgetError(
            f"extension stage would reach {total} elements (budget {budget})",
            points=len(S.points) + len(new_points),
            lines=len(S.lines) + len(new_lines),
            budget=budget,
        )
    if not new_points and not new_lines:
        return S
    return IncidenceStructure(
        [S.term[p] for p in S.points] + new_points,
        [S.term[l] for l in S.lines] + new_lines,
        new_inc,
    )


def is_fixed_point(
    S: IncidenceStructure, mode: ExtensionMode = ExtensionMode.FULL
) -> bool:
    if parallel_pairs(S):
        return False
    if mode is ExtensionMode.FULL and unjoined_pairs(S):
        return False
    return True


def extend(
    S: IncidenceStructure,
    n: int,
    mode: ExtensionMode = ExtensionMode.FULL,
    budget: int = DEFAULT_BUDGET,
) -> ExtensionTrace:
    """Trace of n extension stages; stops computing at a fixed point or budget.

    Once a fixed point is reached the remaining stages repeat the fixed
    structure, so the trace always carries n+1 stages unless the budget
    trips (then it is truncated and marked).
    """
    if n < 0:
        raise ValueError("stage count must be non-negative")
    trace = ExtensionTrace(stages=[S], mode=mode, budget=budget, requested=n)
    current = S
    for k in range(n):
        try:
            nxt = extend_once(current, mode, budget)
        except BudgetError:
            trace.stopped_reason = "budget"
            trace.truncated = True
            return trace
        if nxt is current:
            trace.stopped_reason = "fixed_point"
            trace.fixed_point_stage = k
            trace.stages.extend([current] * (n - k))
            return trace
        trace.stages.append(nxt)
        current = nxt
    return trace
