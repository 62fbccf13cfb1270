"""The plane <-> geometric-lattice-of-length-3 correspondence.

A structure S becomes the bounded lattice {0,1} plus its points (atoms)
and lines (coatoms).  Join of two points is their unique common line,
meet of two lines their unique common point; parallels meet in 0, and
(extending the correspondence to partial structures) unjoined points join
to 1, mirroring the parallel rule.  The names "0" and "1" are reserved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from . import terms as T
from .errors import ContainmentError, NotLengthThreeError, UniquenessError
from .structure import IncidenceStructure

BOTTOM = "0"
TOP = "1"


@dataclass
class GeometricLattice:
    atoms: Tuple[str, ...]
    coatoms: Tuple[str, ...]
    join: Dict[Tuple[str, str], str]
    meet: Dict[Tuple[str, str], str]
    source: Optional[IncidenceStructure] = None
    # (p, q, candidate lines) for point pairs with more than one common line
    ambiguities: List[tuple] = field(default_factory=list)

    @property
    def elements(self) -> Tuple[str, ...]:
        return (BOTTOM,) + self.atoms + self.coatoms + (TOP,)

    def leq(self, a: str, b: str) -> bool:
        return self.join[(a, b)] == b

    def covers(self, a: str, b: str) -> bool:
        """b covers a in the induced order."""
        if a == b or not self.leq(a, b):
            return False
        return not any(
            c not in (a, b) and self.leq(a, c) and self.leq(c, b)
            for c in self.elements
        )

    def rank(self, x: str) -> int:
        if x == BOTTOM:
            return 0
        if x in self.atoms:
            return 1
        if x in self.coatoms:
            return 2
        return 3

    @classmethod
    def from_table(cls, elements, join, meet, source=None) -> "GeometricLattice":
        """Classify elements by covers of 0 / covered-by 1; reject the rest."""
        elems = [e for e in elements if e not in (BOTTOM, TOP)]
        probe = cls(
            atoms=tuple(elems), coatoms=(), join=dict(join), meet=dict(meet),
        )
        atoms, coatoms = [], []
        for e in elems:
            is_atom = probe.covers(BOTTOM, e)
            is_coatom = probe.covers(e, TOP)
            if is_atom and not is_coatom:
                atoms.append(e)
            elif is_coatom and not is_atom:
                coatoms.append(e)
            else:
                raise NotLengthThreeError(
                    f"element {e!r} is not classifiable as atom or coatom"
                )
        return cls(
            atoms=tuple(atoms),
            coatoms=tuple(coatoms),
            join=dict(join),
            meet=dict(meet),
            source=source,
        )


def to_lattice(S: IncidenceStructure, strict: bool = True) -> GeometricLattice:
    """Materialize the full join/meet tables of the bounded lattice view.

    ``strict`` raises on a pairwise-uniqueness violation; otherwise the
    canonically-first candidate is used and the ambiguity is recorded so
    that :func:`check_geometric_length3` can report it.
    """
    for name in S.points + S.lines:
        if name in (BOTTOM, TOP):
            raise UniquenessError(f"element name {name!r} is reserved")
    atoms = S.points
    coatoms = S.lines
    elements = (BOTTOM,) + atoms + coatoms + (TOP,)
    join: Dict[Tuple[str, str], str] = {}
    meet: Dict[Tuple[str, str], str] = {}
    ambiguities: List[tuple] = []

    def put(op, a, b, v):
        op[(a, b)] = v
        op[(b, a)] = v

    for x in elements:
        put(join, x, x, x)
        put(meet, x, x, x)
        put(join, BOTTOM, x, x)
        put(meet, BOTTOM, x, BOTTOM)
        put(join, TOP, x, TOP)
        put(meet, TOP, x, x)
    for p, q in combinations(atoms, 2):
        common = sorted(S.common_lines(p, q), key=lambda l: S.term[l].sort_key())
        if len(common) > 1:
            if strict:
                raise UniquenessError(
                    f"points {p!r}, {q!r} lie on lines {common}; join is ambiguous"
                )
            ambiguities.append((p, q, tuple(common)))
        put(join, p, q, common[0] if common else TOP)
        put(meet, p, q, BOTTOM)
    for l, m in combinations(coatoms, 2):
        common = sorted(S.common_points(l, m), key=lambda p: S.term[p].sort_key())
        if len(common) > 1:
            if strict:
                raise UniquenessError(
                    f"lines {l!r}, {m!r} share points {common}; meet is ambiguous"
                )
            ambiguities.append((l, m, tuple(common)))
        put(meet, l, m, common[0] if common else BOTTOM)
        put(join, l, m, TOP)
    for p in atoms:
        for l in coatoms:
            if S.incident(p, l):
                put(meet, p, l, p)
                put(join, p, l, l)
            else:
                put(meet, p, l, BOTTOM)
                put(join, p, l, TOP)
    lat = GeometricLattice(
        atoms=atoms, coatoms=coatoms, join=join, meet=meet, source=S
    )
    lat.ambiguities = ambiguities
    return lat


def from_lattice(L: GeometricLattice) -> IncidenceStructure:
    """Points from atoms, lines from coatoms, incidence a E b iff a v b = b."""
    if L.source is not None:
        term = dict(L.source.term)
    else:
        term = {}
        order = sorted(L.atoms + L.coatoms, key=_name_depth)
        for name in order:
            term[name] = T.parse_name(name, term)
    inc = [
        (a, b) for a in L.atoms for b in L.coatoms if L.join[(a, b)] == b
    ]
    return IncidenceStructure(
        [term[a] for a in L.atoms], [term[b] for b in L.coatoms], inc
    )


def _name_depth(name: str) -> int:
    return name.count("(")


def check_geometric_length3(L: GeometricLattice) -> Dict[str, List[tuple]]:
    """Exhaustive finite checks; each key maps to its violation witnesses.

    Checks: join well-definedness (recorded ambiguities), boundedness,
    commutativity, gradedness of covers against ranks 0..3, atomisticity,
    and semimodularity on covering pairs.
    """
    out: Dict[str, List[tuple]] = {
        "join_well_defined": list(L.ambiguities),
        "bounded": [],
        "commutative": [],
        "graded": [],
        "atomistic": [],
        "semimodular": [],
    }
    elems = L.elements
    for x in elems:
        if not (L.leq(BOTTOM, x) and L.leq(x, TOP)):
            out["bounded"].append((x,))
    for a, b in combinations(elems, 2):
        if L.join[(a, b)] != L.join[(b, a)] or L.meet[(a, b)] != L.meet[(b, a)]:
            out["commutative"].append((a, b))
    for a in elems:
        for b in elems:
            if L.covers(a, b) and L.rank(b) != L.rank(a) + 1:
                out["graded"].append((a, b, L.rank(a), L.rank(b)))
    for x in elems:
        below = [a for a in L.atoms if L.leq(a, x)]
        j = BOTTOM
        for a in below:
            j = L.join[(j, a)]
        if j != x:
            out["atomistic"].append((x, tuple(below), j))
    # semimodularity: a covers a^b implies a v b covers b
    for a in elems:
        for b in elems:
            m = L.meet[(a, b)]
            if L.covers(m, a) and not L.covers(b, L.join[(a, b)]):
                out["semimodular"].append((a, b))
    return out


def is_sublattice(
    L1: GeometricLattice,
    L2: GeometricLattice,
    mapping: Optional[Dict[str, str]] = None,
) -> bool:
    """The (default: identity) inclusion respects both lattice tables."""
    ok, _ = sublattice_witness(L1, L2, mapping)
    return ok


def sublattice_witness(L1, L2, mapping=None):
    if mapping is None:
        mapping = {e: e for e in L1.elements}
    else:
        mapping = dict(mapping)
        mapping.setdefault(BOTTOM, BOTTOM)
        mapping.setdefault(TOP, TOP)
    e2 = set(L2.elements)
    for e in L1.elements:
        if mapping.get(e) not in e2:
            return False, ("missing", e)
    for a in L1.elements:
        for b in L1.elements:
            fa, fb = mapping[a], mapping[b]
            if mapping[L1.join[(a, b)]] != L2.join[(fa, fb)]:
                return False, ("join", a, b, L1.join[(a, b)], L2.join[(fa, fb)])
            if mapping[L1.meet[(a, b)]] != L2.meet[(fa, fb)]:
                return False, ("meet", a, b, L1.meet[(a, b)], L2.meet[(fa, fb)])
    return True, None


@dataclass
class SubplaneReport:
    """Plane-axiom status and closure status, reported separately.

    The classical completeness notion presumes the inner structure is a
    plane; closure alone is still meaningful for partial structures, so
    both verdicts are carried and ``is_complete_subplane`` is their
    conjunction.
    """

    is_plane: bool
    closed_under_meets: bool
    closed_under_joins: bool
    witnesses: List[tuple]

    @property
    def closed(self) -> bool:
        return self.closed_under_meets and self.closed_under_joins

    @property
    def is_complete_subplane(self) -> bool:
        return self.is_plane and self.closed


def complete_subplane_report(
    S1: IncidenceStructure, S2: IncidenceStructure
) -> SubplaneReport:
    from .axioms import validate

    if not S1.is_induced_substructure_of(S2):
        raise ContainmentError(
            "first structure is not an induced substructure of the second"
        )
    witnesses: List[tuple] = []
    p1 = set(S1.points)
    l1 = set(S1.lines)
    closed_meets = True
    for l, m in combinations(sorted(l1), 2):
        for p in S2.common_points(l, m):
            if p not in p1:
                closed_meets = False
                witnesses.append(("meet", l, m, p))
    closed_joins = True
    for p, q in combinations(sorted(p1), 2):
        for l in S2.common_lines(p, q):
            if l not in l1:
                closed_joins = False
                witnesses.append(("join", p, q, l))
    return SubplaneReport(
        is_plane=validate(S1).is_plane(),
        closed_under_meets=closed_meets,
        closed_under_joins=closed_joins,
        witnesses=witnesses,
    )


def is_complete_subplane(S1: IncidenceStructure, S2: IncidenceStructure) -> bool:
    return complete_subplane_report(S1, S2).is_complete_subplane
