from freeplane import IncidenceStructure, automorphism_group, group_isomorphic
from freeplane.groups import (
    PermutationGroup,
    _close,
    cycle_type,
    perm_order,
)


def cyclic4(domain):
    a, b, c, d = domain
    gen = {a: b, b: c, c: d, d: a}
    return PermutationGroup.from_perms(list(_close([gen]).values()))


def klein4(domain):
    a, b, c, d = domain
    perms = [
        {a: a, b: b, c: c, d: d},
        {a: b, b: a, c: d, d: c},
        {a: c, b: d, c: a, d: b},
        {a: d, b: c, c: b, d: a},
    ]
    return PermutationGroup.from_perms(perms)


def test_orders(fano, mk8, rigid, two_points, quad):
    assert automorphism_group(fano).order == 168
    assert automorphism_group(mk8).order == 48
    assert automorphism_group(rigid).order == 1
    assert automorphism_group(two_points).order == 2
    assert automorphism_group(quad).order == 24


def test_group_laws(fano, quad, rigid):
    for S in (fano, quad, rigid):
        G = automorphism_group(S)
        assert G.verify_group_laws()


def test_cycle_type_and_order():
    p = {"a": "b", "b": "a", "c": "c"}
    assert cycle_type(p) == (1, 2)
    assert perm_order(p) == 2
    assert perm_order({"x": "x"}) == 1


def test_generators_close_to_full_group(fano, quad):
    for S in (fano, quad):
        G = automorphism_group(S)
        gens = G.generators()
        assert len(_close(gens)) == G.order
        assert len(gens) <= 4


def test_isomorphic_groups_different_domains():
    C1 = cyclic4("abcd")
    C2 = cyclic4("wxyz")
    ok, pairing = group_isomorphic(C1, C2)
    assert ok
    assert len(pairing) == 4
    assert len(set(pairing.values())) == 4


def test_cyclic_vs_klein_not_isomorphic():
    C = cyclic4("abcd")
    K = klein4("abcd")
    assert C.order == K.order == 4
    assert C.order_histogram() != K.order_histogram()
    ok, pairing = group_isomorphic(C, K)
    assert not ok and pairing is None


def test_aut_group_isomorphic_under_renaming(quad):
    pmap = {p: p.lower() for p in quad.points}
    lines = {
        l + "x": [pmap[p] for p in quad.line_points[l]] for l in quad.lines
    }
    R = IncidenceStructure.build(list(pmap.values()), lines)
    ok, pairing = group_isomorphic(
        automorphism_group(quad), automorphism_group(R)
    )
    assert ok and len(pairing) == 24


def test_trivial_groups_isomorphic(rigid):
    G = automorphism_group(rigid)
    ok, pairing = group_isomorphic(G, G)
    assert ok and len(pairing) == 1


def test_different_order_fast_reject(fano, quad):
    ok, pairing = group_isomorphic(
        automorphism_group(fano), automorphism_group(quad)
    )
    assert not ok and pairing is None
