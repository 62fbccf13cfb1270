"""Automorphism groups as explicit permutation sets, plus group isomorphism.

Groups are stored extensionally up to a documented cap.  Isomorphism
between two such groups is decided by a generator-image backtracking
search with order and cycle-type prefilters; the search is exhaustive at
desk scale.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import ResourceError
from .morphisms import Morphism, isomorphisms
from .structure import IncidenceStructure

DEFAULT_GROUP_CAP = 1_000_000

Perm = Dict[str, str]


def _key(perm: Perm) -> Tuple[Tuple[str, str], ...]:
    return tuple(sorted(perm.items()))


def _compose(f: Perm, g: Perm) -> Perm:
    """f after g."""
    return {x: f[y] for x, y in g.items()}


def _inverse(f: Perm) -> Perm:
    return {y: x for x, y in f.items()}


def _identity(domain) -> Perm:
    return {x: x for x in domain}


def cycle_type(perm: Perm) -> Tuple[int, ...]:
    seen = set()
    lengths = []
    for start in perm:
        if start in seen:
            continue
        n, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths))


def perm_order(perm: Perm) -> int:
    from math import lcm

    return lcm(*cycle_type(perm)) if perm else 1


@dataclass
class PermutationGroup:
    """All automorphisms of a structure, as permutations of all elements."""

    perms: List[Perm]
    order: int
    complete: bool = True  # False when the extensional cap was hit

    @classmethod
    def from_perms(cls, perms: List[Perm], complete: bool = True):
        return cls(perms=perms, order=len(perms), complete=complete)

    def verify_group_laws(self) -> bool:
        keys = {_key(p) for p in self.perms}
        if len(keys) != self.order or not self.perms:
            return False
        domain = set(self.perms[0])
        if _key(_identity(domain)) not in keys:
            return False
        for p in self.perms:
            if _key(_inverse(p)) not in keys:
                return False
            for q in self.perms:
                if _key(_compose(p, q)) not in keys:
                    return False
        return True

    def order_histogram(self) -> Counter:
        return Counter(perm_order(p) for p in self.perms)

    def cycle_type_histogram(self) -> Counter:
        return Counter(cycle_type(p) for p in self.perms)

    def generators(self) -> List[Perm]:
        """A small generating set found greedily (not necessarily minimal)."""
        if not self.perms:
            return []
        domain = set(self.perms[0])
        gens: List[Perm] = []
        closure = {_key(_identity(domain)): _identity(domain)}
        for p in sorted(self.perms, key=perm_order, reverse=True):
            if _key(p) in closure:
                continue
            gens.append(p)
            closure = _close(list(closure.values()) + [p])
            if len(closure) == self.order:
                break
        return gens


def _close(perms: List[Perm]) -> Dict[tuple, Perm]:
    closure = {_key(p): p for p in perms}
    frontier = list(perms)
    while frontier:
        nxt = []
        for p in frontier:
            for g in perms:
                q = _compose(p, g)
                k = _key(q)
                if k not in closure:
                    closure[k] = q
                    nxt.append(q)
        frontier = nxt
    return closure


def automorphism_group(
    S: IncidenceStructure, cap: int = DEFAULT_GROUP_CAP
) -> PermutationGroup:
    """Exhaustive automorphism enumeration packaged with closure data."""
    morphs = isomorphisms(S, S)
    if len(morphs) > cap:
        gens_only = morphs[:cap]
        return PermutationGroup.from_perms(
            [m.full_map() for m in gens_only], complete=False
        )
    return PermutationGroup.from_perms([m.full_map() for m in morphs])


def automorphisms_as_morphisms(S: IncidenceStructure) -> List[Morphism]:
    return isomorphisms(S, S)


def group_isomorphic(
    G1: PermutationGroup, G2: PermutationGroup, full_check_cap: int = 400
) -> Tuple[bool, Optional[Dict[tuple, tuple]]]:
    """Exhaustive group-isomorphism search between two explicit groups.

    Returns (verdict, pairing); the pairing maps permutation keys of G1
    to permutation keys of G2 when an isomorphism is found.
    """
    if G1.order != G2.order:
        return False, None
    if G1.order_histogram() != G2.order_histogram():
        return False, None
    if not G1.perms:
        return True, {}
    gens = G1.generators()
    by_key2 = {_key(p): p for p in G2.perms}
    dom2 = set(G2.perms[0])
    ident2 = _identity(dom2)

    candidates = []
    for g in gens:
        og = perm_order(g)
        candidates.append([p for p in G2.perms if perm_order(p) == og])

    elements1 = _enumerate_words(gens, G1.order)
    if elements1 is None:
        raise ResourceError("generator closure did not reach the full group")

    def attempt(images: List[Perm]) -> Optional[Dict[tuple, tuple]]:
        mapping: Dict[tuple, Perm] = {
            _key(_identity(set(G1.perms[0]))): ident2
        }
        for g_key, word in elements1.items():
            h = ident2
            for idx in word:
                h = _compose(h, images[idx])
            if g_key in mapping and _key(mapping[g_key]) != _key(h):
                return None
            mapping[g_key] = h
        image_keys = {_key(h) for h in mapping.values()}
        if len(image_keys) != G1.order or not image_keys <= set(by_key2):
            return None
        if G1.order <= full_check_cap:
            for p in G1.perms:
                for q in G1.perms:
                    lhs = mapping[_key(_compose(p, q))]
                    rhs = _compose(mapping[_key(p)], mapping[_key(q)])
                    if _key(lhs) != _key(rhs):
                        return None
        return {k: _key(v) for k, v in mapping.items()}

    def backtrack(i: int, chosen: List[Perm]) -> Optional[Dict[tuple, tuple]]:
        if i == len(gens):
            return attempt(chosen)
        for cand in candidates[i]:
            result = backtrack(i + 1, chosen + [cand])
            if result is not None:
                return result
        return None

    pairing = backtrack(0, [])
    return (pairing is not None), pairing


def _enumerate_words(gens: List[Perm], order: int):
    """Map each group element (key) to one word in generator indices."""
    if not gens:
        return {}
    domain = set(gens[0])
    ident = _identity(domain)
    words: Dict[tuple, tuple] = {_key(ident): ()}
    frontier = [(ident, ())]
    while frontier:
        nxt = []
        for p, w in frontier:
            for i, g in enumerate(gens):
                q = _compose(p, g)
                k = _key(q)
                if k not in words:
                    words[k] = w + (i,)
                    nxt.append((q, w + (i,)))
        frontier = nxt
    if len(words) != order:
        return None
    return words
