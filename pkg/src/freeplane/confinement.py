"""Confined-plane predicates and the confined core.

The core is computed by iterative deletion: any point on fewer than three
surviving lines and any line with fewer than three surviving points is
removed until stable.  The result is the unique maximal substructure with
minimum point-degree 3 and minimum line-size 3, independent of deletion
order.  Peeling only looks at incidence counts; whether the core must
additionally satisfy the plane axioms is left to the caller (the CLI
exposes a flag for that check).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .structure import IncidenceStructure

POINT_REASON = "point-degree<3"
LINE_REASON = "line-size<3"


@dataclass
class CoreResult:
    core: IncidenceStructure
    deleted: List[Tuple[str, str]]  # (element, reason) in deletion order
    rounds: int


def is_confined_finite(S: IncidenceStructure) -> bool:
    """Every point on >=3 lines and every line with >=3 points."""
    return all(len(S.point_lines[p]) >= 3 for p in S.points) and all(
        len(S.line_points[l]) >= 3 for l in S.lines
    )


def confined_core(
    S: IncidenceStructure, rng: Optional[random.Random] = None
) -> CoreResult:
    """Iteratively peel low-degree elements until stable.

    ``rng``, when given, shuffles the deletion order inside each sweep;
    the resulting core is the same for every order (tested property).
    """
    points = {p: set(S.point_lines[p]) for p in S.points}
    lines = {l: set(S.line_points[l]) for l in S.lines}
    deleted: List[Tuple[str, str]] = []
    rounds = 0
    while True:
        victims = [(p, POINT_REASON) for p in points if len(points[p]) < 3]
        victims += [(l, LINE_REASON) for l in lines if len(lines[l]) < 3]
        if not victims:
            break
        rounds += 1
        if rng is not None:
            rng.shuffle(victims)
        for name, reason in victims:
            if reason == POINT_REASON:
                for l in points.pop(name):
                    if l in lines:
                        lines[l].discard(name)
            else:
                for p in lines.pop(name):
                    if p in points:
                        points[p].discard(name)
            deleted.append((name, reason))
    core = IncidenceStructure(
        [S.term[p] for p in points],
        [S.term[l] for l in lines],
        [(p, l) for l, ps in lines.items() for p in ps],
    )
    return CoreResult(core=core, deleted=deleted, rounds=rounds)
