import random
from itertools import combinations

from freeplane import (
    IncidenceStructure,
    confined_core,
    extend,
    is_confined_finite,
)


def test_confined_fixtures(fano, mk8, quad):
    assert is_confined_finite(fano)
    assert is_confined_finite(mk8)
    assert not is_confined_finite(quad)


def test_fano_minus_incidence_not_confined(fano):
    inc = sorted(fano.incidence)
    S = fano.replace(incidence=inc[1:])
    assert not is_confined_finite(S)


def test_core_of_confined_is_identity(fano, mk8):
    for S in (fano, mk8):
        result = confined_core(S)
        assert result.core == S
        assert result.deleted == []
        assert result.rounds == 0


def test_quad_core_empty(quad):
    result = confined_core(quad)
    assert result.core.points == ()
    assert result.core.lines == ()
    assert len(result.deleted) == 10


def test_extension_core_empty_for_quad(quad):
    trace = extend(quad, 2)
    assert confined_core(trace.stages[2]).core.element_count() == 0


def test_core_extension_invariance(fano, mk8, quad, star):
    for S in (fano, mk8, quad, star):
        base_core = confined_core(S).core
        trace = extend(S, 3, budget=10_000)
        for stage in trace.stages:
            assert confined_core(stage).core == base_core


def test_order_independence(quad, star, mk8):
    for S in (quad, star, mk8):
        reference = confined_core(S).core
        for seed in range(50):
            rng = random.Random(seed)
            assert confined_core(S, rng=rng).core == reference


def test_idempotence(fano, quad, star, mk8):
    for S in (fano, quad, star, mk8):
        core = confined_core(S).core
        again = confined_core(core)
        assert again.core == core
        assert again.deleted == []


def test_deleted_partition(star):
    result = confined_core(star)
    survivors = set(result.core.points) | set(result.core.lines)
    removed = {name for name, _ in result.deleted}
    everything = set(star.points) | set(star.lines)
    assert survivors | removed == everything
    assert survivors & removed == set()


def test_maximality_by_exhaustion(star, fano):
    """Any substructure with min degree 3 / min size 3 sits inside the core."""
    for S in (star, fano):
        core = confined_core(S).core
        core_elems = set(core.points) | set(core.lines)
        points, lines = S.points, S.lines
        found_qualifying = 0
        for pk in range(len(points) + 1):
            for psub in combinations(points, pk):
                for lk in range(len(lines) + 1):
                    for lsub in combinations(lines, lk):
                        sub = S.induced(psub, lsub)
                        if not sub.points and not sub.lines:
                            continue
                        ok = all(
                            len(sub.point_lines[p]) >= 3 for p in sub.points
                        ) and all(
                            len(sub.line_points[l]) >= 3 for l in sub.lines
                        )
                        if ok:
                            found_qualifying += 1
                            assert set(sub.points) | set(sub.lines) <= core_elems
        if S is fano:
            assert found_qualifying >= 1  # fano itself qualifies


def test_small_nested_core():
    # fano plus a pendant tail peels back to fano
    from freeplane.fixtures import fano as make_fano

    F = make_fano()
    lines = {l: list(F.line_points[l]) for l in F.lines}
    lines["tail"] = ["p0", "x"]
    S = IncidenceStructure.build(list(F.points) + ["x"], lines)
    result = confined_core(S)
    assert result.core == F
    assert ("x", "point-degree<3") in result.deleted or (
        "tail",
        "line-size<3",
    ) in result.deleted
