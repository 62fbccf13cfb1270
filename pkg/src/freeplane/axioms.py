"""Plane axioms and the classifications built on them.

Axiom keys used throughout:

* ``A``  every pair of distinct points is joined by exactly one line
* ``B``  every pair of distinct lines shares at most one point
* ``C``  every line contains at least two points
* ``D``  there exist three non-collinear points
* ``Bprime``  every pair of distinct lines shares exactly one point
* ``pair_unique``  every pair of distinct points shares at most one line
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Tuple

from .errors import NotAPlaneError
from .structure import IncidenceStructure

AXIOMS = ("A", "B", "C", "D", "Bprime", "pair_unique")


@dataclass
class ValidationReport:
    violations: Dict[str, List[tuple]] = field(
        default_factory=lambda: {a: [] for a in AXIOMS}
    )

    def satisfied(self, axiom: str) -> bool:
        return not self.violations[axiom]

    @property
    def satisfied_map(self) -> Dict[str, bool]:
        return {a: self.satisfied(a) for a in AXIOMS}

    def is_plane(self) -> bool:
        return all(self.satisfied(a) for a in ("A", "B", "C", "D"))

    def to_dict(self):
        return {
            "satisfied": self.satisfied_map,
            "violations": {a: [list(w) for w in v] for a, v in self.violations.items()},
        }


def validate(S: IncidenceStructure) -> ValidationReport:
    """Check all plane axioms, collecting minimal witnesses per violation."""
    rep = ValidationReport()
    for p, q in combinations(S.points, 2):
        common = sorted(S.common_lines(p, q))
        if len(common) != 1:
            rep.violations["A"].append((p, q, tuple(common)))
        if len(common) > 1:
            rep.violations["pair_unique"].append((p, q, tuple(common)))
    for l, m in combinations(S.lines, 2):
        common = sorted(S.common_points(l, m))
        if len(common) > 1:
            rep.violations["B"].append((l, m, tuple(common)))
        if len(common) != 1:
            rep.violations["Bprime"].append((l, m, tuple(common)))
    for l in S.lines:
        if len(S.line_points[l]) < 2:
            rep.violations["C"].append((l, len(S.line_points[l])))
    if not _has_noncollinear_triple(S):
        rep.violations["D"].append(("no-noncollinear-triple",))
    return rep


def _has_noncollinear_triple(S: IncidenceStructure) -> bool:
    for p, q, r in combinations(S.points, 3):
        if not (S.common_lines(p, q) & S.point_lines[r]):
            return True
    return False


def is_projective(S: IncidenceStructure) -> bool:
    """True iff every pair of distinct lines meets in exactly one point."""
    rep = validate(S)
    if not rep.is_plane():
        raise NotAPlaneError("structure fails plane axioms (A)-(D)", report=rep)
    return rep.satisfied("Bprime")


def trivial_lines(S: IncidenceStructure) -> Tuple[str, ...]:
    """Lines with exactly two points (lines with <2 points are axiom-C noise)."""
    return tuple(l for l in S.lines if len(S.line_points[l]) == 2)


def nontrivial_lines(S: IncidenceStructure) -> Tuple[str, ...]:
    return tuple(l for l in S.lines if len(S.line_points[l]) >= 3)


def exceptional_points(S: IncidenceStructure) -> Tuple[str, ...]:
    """Points on at least three non-trivial lines.

    On finite input this is the whole diagnostic content of simplicity:
    the finite exception set is vacuous, so the set itself is reported.
    """
    nt = set(nontrivial_lines(S))
    return tuple(p for p in S.points if len(S.point_lines[p] & nt) >= 3)


def parallel_pairs(S: IncidenceStructure) -> List[Tuple[str, str]]:
    """Unordered pairs of distinct lines with empty intersection, canonical order."""
    return [
        (l, m)
        for l, m in combinations(S.lines, 2)
        if not S.common_points(l, m)
    ]


def unjoined_pairs(S: IncidenceStructure) -> List[Tuple[str, str]]:
    """Unordered pairs of distinct points with no common line, canonical order."""
    return [
        (p, q)
        for p, q in combinations(S.points, 2)
        if not S.common_lines(p, q)
    ]
