"""Finite incidence structures: the carrier for planes and their truncations.

The carrier enforces only structural well-formedness (disjoint identifier
sets, no dangling incidences).  The "at most one" uniqueness laws and the
plane axioms are validator predicates in :mod:`freeplane.axioms`, so one
type serves planes, configurations, and mid-extension truncations.
Structures are immutable after construction.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, Mapping, Tuple

from . import terms as T
from .errors import StructureError, UniquenessError


class IncidenceStructure:
    """Immutable finite point-line incidence structure.

    Elements are identified by canonical term names; ``term`` maps each
    name to its :class:`~freeplane.terms.Term`.  Points and lines are kept
    in canonical order (term sort key).
    """

    __slots__ = (
        "points",
        "lines",
        "term",
        "line_points",
        "point_lines",
        "incidence",
        "_key",
    )

    def __init__(
        self,
        point_terms: Iterable[T.Term],
        line_terms: Iterable[T.Term],
        incidence: Iterable[Tuple[str, str]],
    ):
        pts = sorted(point_terms, key=lambda t: t.sort_key())
        lns = sorted(line_terms, key=lambda t: t.sort_key())
        term: Dict[str, T.Term] = {}
        for t in pts + lns:
            if t.name in term:
                raise StructureError(f"duplicate element name {t.name!r}")
            term[t.name] = t
        pset = {t.name for t in pts}
        lset = {t.name for t in lns}
        if pset & lset:
            raise StructureError(
                f"point/line identifier sets overlap: {sorted(pset & lset)}"
            )
        inc = frozenset(incidence)
        for p, l in inc:
            if p not in pset:
                raise StructureError(f"incidence references unknown point {p!r}")
            if l not in lset:
                raise StructureError(f"incidence references unknown line {l!r}")
        lp: Dict[str, FrozenSet[str]] = {l: frozenset() for l in lset}
        pl: Dict[str, FrozenSet[str]] = {p: frozenset() for p in pset}
        lp_work = {l: set() for l in lset}
        pl_work = {p: set() for p in pset}
        for p, l in inc:
            lp_work[l].add(p)
            pl_work[p].add(l)
        lp = {l: frozenset(s) for l, s in lp_work.items()}
        pl = {p: frozenset(s) for p, s in pl_work.items()}

        self.points = tuple(t.name for t in pts)
        self.lines = tuple(t.name for t in lns)
        self.term = term
        self.line_points = lp
        self.point_lines = pl
        self.incidence = inc
        self._key = (self.points, self.lines, self.incidence)

    # -- construction helpers -------------------------------------------

    @classmethod
    def build(
        cls,
        points: Iterable[str],
        lines: Mapping[str, Iterable[str]],
    ) -> "IncidenceStructure":
        """Build a base (stage-0) structure from plain names.

        ``lines`` maps each line name to the names of its points.
        """
        pterms = [T.base(p) for p in points]
        lterms = [T.base(l) for l in lines]
        inc = [(p, l) for l, ps in lines.items() for p in ps]
        return cls(pterms, lterms, inc)

    def replace(self, point_terms=None, line_terms=None, incidence=None):
        return IncidenceStructure(
            point_terms
            if point_terms is not None
            else [self.term[p] for p in self.points],
            line_terms
            if line_terms is not None
            else [self.term[l] for l in self.lines],
            incidence if incidence is not None else self.incidence,
        )

    # -- basic queries --------------------------------------------------

    def is_point(self, name: str) -> bool:
        return name in self.point_lines

    def is_line(self, name: str) -> bool:
        return name in self.line_points

    def incident(self, point: str, line: str) -> bool:
        return (point, line) in self.incidence

    def common_lines(self, p: str, q: str) -> FrozenSet[str]:
        return self.point_lines[p] & self.point_lines[q]

    def common_points(self, l: str, m: str) -> FrozenSet[str]:
        return self.line_points[l] & self.line_points[m]

    def max_stage(self) -> int:
        return max((t.stage for t in self.term.values()), default=0)

    def element_count(self) -> int:
        return len(self.points) + len(self.lines)

    def check_uniqueness(self):
        """Raise UniquenessError if the "at most one" laws fail."""
        pts = self.points
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if len(self.common_lines(pts[i], pts[j])) > 1:
                    raise UniquenessError(
                        f"points {pts[i]!r}, {pts[j]!r} lie on two common lines"
                    )
        lns = self.lines
        for i in range(len(lns)):
            for j in range(i + 1, len(lns)):
                if len(self.common_points(lns[i], lns[j])) > 1:
                    raise UniquenessError(
                        f"lines {lns[i]!r}, {lns[j]!r} share two common points"
                    )

    def is_substructure_of(self, other: "IncidenceStructure") -> bool:
        """Elements and incidences of self are contained in other."""
        return (
            set(self.points) <= set(other.points)
            and set(self.lines) <= set(other.lines)
            and self.incidence <= other.incidence
        )

    def is_induced_substructure_of(self, other: "IncidenceStructure") -> bool:
        """Substructure whose incidence is the full restriction of other's."""
        if not (
            set(self.points) <= set(other.points)
            and set(self.lines) <= set(other.lines)
        ):
            return False
        pset = set(self.points)
        for l in self.lines:
            if self.line_points[l] != other.line_points[l] & pset:
                return False
        return True

    def induced(self, points: Iterable[str], lines: Iterable[str]):
        """The induced substructure on the given element subsets."""
        pset = set(points)
        lset = set(lines)
        return IncidenceStructure(
            [self.term[p] for p in pset],
            [self.term[l] for l in lset],
            [(p, l) for (p, l) in self.incidence if p in pset and l in lset],
        )

    # -- identity -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, IncidenceStructure):
            return NotImplemented
        return self._key == other._key and self.term == other.term

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return (
            f"IncidenceStructure({len(self.points)} points, "
            f"{len(self.lines)} lines, {len(self.incidence)} incidences)"
        )
