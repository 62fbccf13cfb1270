"""Independent brute-force oracles.

These deliberately re-derive everything from first principles on plain
sets, sharing no code with the library paths they check.
"""

from itertools import combinations, permutations


# -- axiom oracle --------------------------------------------------------


def naive_axiom_check(points, line_sets):
    """Re-implementation of the axiom definitions on plain sets.

    ``line_sets`` maps line name -> set of point names.  Returns a dict
    of axiom name -> bool.
    """
    points = list(points)
    lines = list(line_sets)
    a_ok = True
    uniq_ok = True
    for p, q in combinations(points, 2):
        joining = [l for l in lines if p in line_sets[l] and q in line_sets[l]]
        if len(joining) != 1:
            a_ok = False
        if len(joining) > 1:
            uniq_ok = False
    b_ok = True
    bprime_ok = True
    for l, m in combinations(lines, 2):
        shared = line_sets[l] & line_sets[m]
        if len(shared) > 1:
            b_ok = False
        if len(shared) != 1:
            bprime_ok = False
    c_ok = all(len(line_sets[l]) >= 2 for l in lines)
    d_ok = False
    for p, q, r in combinations(points, 3):
        collinear = any(
            p in line_sets[l] and q in line_sets[l] and r in line_sets[l]
            for l in lines
        )
        if not collinear:
            d_ok = True
            break
    return {
        "A": a_ok,
        "B": b_ok,
        "C": c_ok,
        "D": d_ok,
        "Bprime": bprime_ok,
        "pair_unique": uniq_ok,
    }


# -- staged extension oracle ---------------------------------------------


def naive_extension_sizes(points, line_sets, n, full=True):
    """Stage sizes of the free extension, computed on frozensets.

    Generated points are ('meet', l, m) tokens and generated lines are
    ('join', p, q) tokens with their own incidences; only sizes are meant
    to be compared against the engine.
    """
    pts = set(points)
    lns = {l: frozenset(ps) for l, ps in line_sets.items()}
    on = {p: frozenset(l for l in lns if p in lns[l]) for p in pts}
    sizes = [(len(pts), len(lns))]
    for _ in range(n):
        par = [
            (l, m)
            for l, m in combinations(sorted(lns, key=repr), 2)
            if not (lns[l] & lns[m])
        ]
        unj = [
            (p, q)
            for p, q in combinations(sorted(pts, key=repr), 2)
            if not (on[p] & on[q])
        ]
        new_pts = {("meet",) + tuple(sorted(pair, key=repr)): pair for pair in par}
        new_lns = {}
        if full:
            new_lns = {
                ("join",) + tuple(sorted(pair, key=repr)): pair for pair in unj
            }
        for name, (l, m) in new_pts.items():
            pts.add(name)
            lns[l] = lns[l] | {name}
            lns[m] = lns[m] | {name}
            on[name] = frozenset((l, m))
        for name, (p, q) in new_lns.items():
            lns[name] = frozenset((p, q))
            on[p] = on[p] | {name}
            on[q] = on[q] | {name}
        # rebuild incidence index for points gaining membership
        on = {p: frozenset(l for l in lns if p in lns[l]) for p in pts}
        sizes.append((len(pts), len(lns)))
    return sizes


# -- morphism enumeration oracle -----------------------------------------


def brute_force_morphisms(S1, S2, kind):
    """Exhaustive enumeration of injective point+line maps of a kind.

    Enumerates all injective point maps; for each, all injective line
    maps compatible with the incidence biconditional (which factorizes
    per line).  Lattice-kind candidates are then filtered by a direct
    meets/joins re-check.  Returns a sorted list of (point_map_items,
    line_map_items) tuples.
    """
    p1, l1 = list(S1.points), list(S1.lines)
    p2, l2 = list(S2.points), list(S2.lines)
    iso = kind == "isomorphism"
    if iso and (len(p1) != len(p2) or len(l1) != len(l2)):
        return []
    if len(p1) > len(p2) or len(l1) > len(l2):
        return []
    idx1 = {p: i for i, p in enumerate(p1)}
    col1 = {
        l: sum(1 << idx1[p] for p in S1.line_points[l]) for l in l1
    }
    results = []
    for images in permutations(p2, len(p1)):
        pmap = dict(zip(p1, images))
        # bitmask of S2-incidence pulled back through pmap, per target line
        tcol = {}
        for m in l2:
            mask = 0
            mem = S2.line_points[m]
            for i, p in enumerate(p1):
                if pmap[p] in mem:
                    mask |= 1 << i
            tcol[m] = mask
        compat = {l: [m for m in l2 if tcol[m] == col1[l]] for l in l1}
        _assign_lines(S1, S2, kind, pmap, l1, compat, {}, results)
    if kind in ("lattice", "isomorphism"):
        results = [
            r for r in results if _lattice_ok(S1, S2, dict(r[0]), dict(r[1]))
        ]
    if iso:
        results = [
            r
            for r in results
            if len(r[0]) == len(p2) and len(r[1]) == len(l2)
        ]
    return sorted(results)


def _assign_lines(S1, S2, kind, pmap, lines, compat, lmap, results):
    if len(lmap) == len(lines):
        results.append(
            (tuple(sorted(pmap.items())), tuple(sorted(lmap.items())))
        )
        return
    l = lines[len(lmap)]
    used = set(lmap.values())
    for m in compat[l]:
        if m in used:
            continue
        lmap[l] = m
        _assign_lines(S1, S2, kind, pmap, lines, compat, lmap, results)
        del lmap[l]


def _lattice_ok(S1, S2, pmap, lmap):
    for p, q in combinations(S1.points, 2):
        c1 = S1.common_lines(p, q)
        c2 = S2.common_lines(pmap[p], pmap[q])
        if not c1 and c2:
            return False
        if c1 and {lmap[c] for c in c1} != c2:
            return False
    for l, m in combinations(S1.lines, 2):
        c1 = S1.common_points(l, m)
        c2 = S2.common_points(lmap[l], lmap[m])
        if not c1 and c2:
            return False
        if c1 and {pmap[c] for c in c1} != c2:
            return False
    return True


def line_sets_of(S):
    return {l: set(S.line_points[l]) for l in S.lines}
