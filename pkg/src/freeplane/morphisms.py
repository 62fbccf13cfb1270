"""Backtracking search for embeddings, isomorphisms and automorphisms.

Three morphism kinds:

* ``incidence``  injective point and line maps with p E l <=> f(p) E f(l)
* ``lattice``    the induced map on the bounded lattices preserves 0, 1,
  meet and join exactly (the official embedding notion here); for
  type-preserving maps this is incidence preservation plus: joined point
  pairs map onto the join of the images, unjoined pairs stay unjoined,
  and dually for meets of lines
* ``isomorphism``  bijective lattice embedding (the inverse is then one too)

Preservation of 0 forces parallel pairs to land on parallel pairs, which
is the strongest pruning filter in the lattice search.  Every complete
candidate is re-verified by the naive checker before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .errors import ResourceError
from .structure import IncidenceStructure

KINDS = ("incidence", "lattice", "isomorphism")
DEFAULT_NODE_CAP = 5_000_000


@dataclass(frozen=True)
class Morphism:
    kind: str
    point_map: Tuple[Tuple[str, str], ...]
    line_map: Tuple[Tuple[str, str], ...]

    @classmethod
    def from_dicts(cls, kind, pmap: Dict[str, str], lmap: Dict[str, str]):
        return cls(
            kind,
            tuple(sorted(pmap.items())),
            tuple(sorted(lmap.items())),
        )

    @property
    def points(self) -> Dict[str, str]:
        return dict(self.point_map)

    @property
    def lines(self) -> Dict[str, str]:
        return dict(self.line_map)

    def full_map(self) -> Dict[str, str]:
        out = dict(self.point_map)
        out.update(self.line_map)
        return out

    def compose(self, other: "Morphism") -> "Morphism":
        """self after other: (self . other)(x) = self(other(x))."""
        sp, sl = self.points, self.lines
        return Morphism.from_dicts(
            self.kind,
            {x: sp[y] for x, y in other.point_map},
            {x: sl[y] for x, y in other.line_map},
        )

    def inverse(self) -> "Morphism":
        return Morphism(
            self.kind,
            tuple(sorted((b, a) for a, b in self.point_map)),
            tuple(sorted((b, a) for a, b in self.line_map)),
        )

    def to_dict(self):
        return {
            "kind": self.kind,
            "points": dict(self.point_map),
            "lines": dict(self.line_map),
        }


def _unique_common_line(S, p, q):
    common = S.common_lines(p, q)
    if len(common) == 1:
        return next(iter(common))
    return None


def _unique_common_point(S, l, m):
    common = S.common_points(l, m)
    if len(common) == 1:
        return next(iter(common))
    return None


def verify_morphism(
    S1: IncidenceStructure,
    S2: IncidenceStructure,
    pmap: Dict[str, str],
    lmap: Dict[str, str],
    kind: str,
) -> Tuple[bool, Optional[tuple]]:
    """Naive full check of a candidate morphism; returns (ok, witness)."""
    if set(pmap) != set(S1.points) or set(lmap) != set(S1.lines):
        return False, ("domain",)
    if len(set(pmap.values())) != len(pmap) or len(set(lmap.values())) != len(lmap):
        return False, ("injectivity",)
    p2, l2 = set(S2.points), set(S2.lines)
    if not set(pmap.values()) <= p2 or not set(lmap.values()) <= l2:
        return False, ("codomain",)
    if kind == "isomorphism" and (
        len(pmap) != len(S2.points) or len(lmap) != len(S2.lines)
    ):
        return False, ("bijectivity",)
    for p in S1.points:
        for l in S1.lines:
            if S1.incident(p, l) != S2.incident(pmap[p], lmap[l]):
                return False, ("incidence", p, l)
    if kind in ("lattice", "isomorphism"):
        for p, q in combinations(S1.points, 2):
            c1 = S1.common_lines(p, q)
            c2 = S2.common_lines(pmap[p], pmap[q])
            if not c1:
                if c2:
                    return False, ("join", p, q, sorted(c2))
            else:
                if {lmap[c] for c in c1} != c2:
                    return False, ("join", p, q, sorted(c1), sorted(c2))
        for l, m in combinations(S1.lines, 2):
            c1 = S1.common_points(l, m)
            c2 = S2.common_points(lmap[l], lmap[m])
            if not c1:
                if c2:
                    return False, ("meet", l, m, sorted(c2))
            else:
                if {pmap[c] for c in c1} != c2:
                    return False, ("meet", l, m, sorted(c1), sorted(c2))
    return True, None


class _Search:
    def __init__(self, S1, S2, kind, limit, node_cap):
        self.S1, self.S2, self.kind = S1, S2, kind
        self.limit = limit
        self.node_cap = node_cap
        self.nodes = 0
        self.found: List[Morphism] = []
        self.lattice = kind in ("lattice", "isomorphism")
        self.iso = kind == "isomorphism"
        # degree and parallel/unjoined-degree invariants
        self.pdeg1 = {p: len(S1.point_lines[p]) for p in S1.points}
        self.pdeg2 = {p: len(S2.point_lines[p]) for p in S2.points}
        self.ldeg1 = {l: len(S1.line_points[l]) for l in S1.lines}
        self.ldeg2 = {l: len(S2.line_points[l]) for l in S2.lines}
        if self.lattice:
            self.par1 = self._parallel_degrees(S1)
            self.par2 = self._parallel_degrees(S2)
            self.unj1 = self._unjoined_degrees(S1)
            self.unj2 = self._unjoined_degrees(S2)
        self.order = list(S1.points) + list(S1.lines)
        self.assign: Dict[str, str] = {}
        self.used_p: set = set()
        self.used_l: set = set()

    @staticmethod
    def _parallel_degrees(S):
        deg = {l: 0 for l in S.lines}
        for l, m in combinations(S.lines, 2):
            if not S.common_points(l, m):
                deg[l] += 1
                deg[m] += 1
        return deg

    @staticmethod
    def _unjoined_degrees(S):
        deg = {p: 0 for p in S.points}
        for p, q in combinations(S.points, 2):
            if not S.common_lines(p, q):
                deg[p] += 1
                deg[q] += 1
        return deg

    def run(self) -> List[Morphism]:
        if self.iso and (
            len(self.S1.points) != len(self.S2.points)
            or len(self.S1.lines) != len(self.S2.lines)
            or len(self.S1.incidence) != len(self.S2.incidence)
        ):
            return []
        if len(self.S1.points) > len(self.S2.points) or len(self.S1.lines) > len(
            self.S2.lines
        ):
            return []
        self._extend(0)
        return sorted(self.found, key=lambda m: (m.point_map, m.line_map))

    def _emit(self):
        pmap = {x: self.assign[x] for x in self.S1.points}
        lmap = {x: self.assign[x] for x in self.S1.lines}
        ok, _ = verify_morphism(self.S1, self.S2, pmap, lmap, self.kind)
        if ok:
            self.found.append(Morphism.from_dicts(self.kind, pmap, lmap))

    def _extend(self, depth) -> bool:
        """Returns False when the limit was reached and search should stop."""
        if self.limit is not None and len(self.found) >= self.limit:
            return False
        if depth == len(self.order):
            self._emit()
            return self.limit is None or len(self.found) < self.limit
        x = self.order[depth]
        is_point = self.S1.is_point(x)
        targets = self.S2.points if is_point else self.S2.lines
        for y in targets:
            self.nodes += 1
            if self.nodes > self.node_cap:
                raise ResourceError(
                    f"search node cap {self.node_cap} exceeded",
                    partial=sorted(
                        self.found, key=lambda m: (m.point_map, m.line_map)
                    ),
                    nodes=self.nodes,
                )
            if not self._feasible(x, y, is_point):
                continue
            self.assign[x] = y
            (self.used_p if is_point else self.used_l).add(y)
            more = self._extend(depth + 1)
            del self.assign[x]
            (self.used_p if is_point else self.used_l).discard(y)
            if not more:
                return False
        return True

    def _feasible(self, x, y, is_point) -> bool:
        S1, S2 = self.S1, self.S2
        if is_point:
            if y in self.used_p:
                return False
            d1, d2 = self.pdeg1[x], self.pdeg2[y]
            if d1 > d2 or (self.iso and d1 != d2):
                return False
            if self.lattice:
                u1, u2 = self.unj1[x], self.unj2[y]
                if u1 > u2 or (self.iso and u1 != u2):
                    return False
            for l, fl in self.assign.items():
                if S1.is_line(l) and S1.incident(x, l) != S2.incident(y, fl):
                    return False
            if self.lattice:
                for p, fp in self.assign.items():
                    if not S1.is_point(p) or p == x:
                        continue
                    c = _unique_common_line(S1, x, p)
                    img = _unique_common_line(S2, y, fp)
                    if c is None:
                        if S1.common_lines(x, p):
                            continue  # ambiguous source; final verify decides
                        if img is not None or S2.common_lines(y, fp):
                            return False
                    else:
                        if img is None:
                            return False
                        fc = self.assign.get(c)
                        if fc is not None and fc != img:
                            return False
        else:
            if y in self.used_l:
                return False
            d1, d2 = self.ldeg1[x], self.ldeg2[y]
            if d1 > d2 or (self.iso and d1 != d2):
                return False
            if self.lattice:
                u1, u2 = self.par1[x], self.par2[y]
                if u1 > u2 or (self.iso and u1 != u2):
                    return False
            for p, fp in self.assign.items():
                if S1.is_point(p) and S1.incident(p, x) != S2.incident(fp, y):
                    return False
            if self.lattice:
                for l, fl in self.assign.items():
                    if not S1.is_line(l) or l == x:
                        continue
                    c = _unique_common_point(S1, x, l)
                    img = _unique_common_point(S2, y, fl)
                    if c is None:
                        if S1.common_points(x, l):
                            continue
                        if img is not None or S2.common_points(y, fl):
                            return False
                    else:
                        if img is None:
                            return False
                        fc = self.assign.get(c)
                        if fc is not None and fc != img:
                            return False
        return True


def embeddings(
    S1: IncidenceStructure,
    S2: IncidenceStructure,
    kind: str = "lattice",
    limit: Optional[int] = None,
    node_cap: int = DEFAULT_NODE_CAP,
) -> List[Morphism]:
    """All (up to limit) injective morphisms of the requested kind."""
    if kind not in KINDS:
        raise ValueError(f"unknown morphism kind {kind!r}")
    if limit is not None and limit < 1:
        raise ValueError("limit must be >= 1 or None")
    return _Search(S1, S2, kind, limit, node_cap).run()


def isomorphisms(
    S1: IncidenceStructure,
    S2: IncidenceStructure,
    node_cap: int = DEFAULT_NODE_CAP,
) -> List[Morphism]:
    return embeddings(S1, S2, kind="isomorphism", node_cap=node_cap)


def bi_embeddable(
    S1: IncidenceStructure,
    S2: IncidenceStructure,
    kind: str = "lattice",
    node_cap: int = DEFAULT_NODE_CAP,
) -> bool:
    fwd = embeddings(S1, S2, kind=kind, limit=1, node_cap=node_cap)
    if not fwd:
        return False
    return bool(embeddings(S2, S1, kind=kind, limit=1, node_cap=node_cap))
