import pytest

from freeplane import (
    IncidenceStructure,
    Morphism,
    PreconditionError,
    check_restriction,
    completeness_witness,
    embeddings,
    extend,
    extend_embedding,
    fullness_check,
    get_encoder,
    isomorphisms,
    spb_check,
    verify_morphism,
)


def identity_morphism(S, kind="lattice"):
    return Morphism.from_dicts(
        kind, {p: p for p in S.points}, {l: l for l in S.lines}
    )


def spb_instances(two_points, path3, triangle, rigid):
    return [
        ("two_points", two_points),
        ("path3", path3),
        ("triangle", triangle),
        ("rigid", rigid),
    ]


# -- extend_embedding ----------------------------------------------------


def test_extend_identity_on_fixed_point(fano):
    trace = extend(fano, 3)
    f = identity_morphism(fano)
    h = extend_embedding(f, trace, trace, 3)
    assert h.points == {p: p for p in fano.points}
    assert h.lines == {l: l for l in fano.lines}


def test_extend_quad_automorphisms(quad):
    trace = extend(quad, 2)
    S2 = trace.stages[2]
    meets = sorted(p for p in S2.points if S2.term[p].kind == "meet")
    assert len(meets) == 3
    extended = set()
    for f in isomorphisms(quad, quad):
        h = extend_embedding(f, trace, trace, 2)
        # the three diagonal points are permuted among themselves
        assert sorted(h.points[p] for p in meets) == meets
        extended.add((h.point_map, h.line_map))
    assert len(extended) == 24


def test_extend_functoriality(mk8):
    trace = extend(mk8, 2)
    auts = isomorphisms(mk8, mk8)
    f, g = auts[1], auts[5]
    Ff = extend_embedding(f, trace, trace, 2)
    Fg = extend_embedding(g, trace, trace, 2)
    Ffg = extend_embedding(f.compose(g), trace, trace, 2)
    assert Ff.compose(Fg).point_map == Ffg.point_map
    assert Ff.compose(Fg).line_map == Ffg.line_map
    ok, witness = verify_morphism(
        trace.stages[2], trace.stages[2], Ffg.points, Ffg.lines, "lattice"
    )
    assert ok, witness


def test_extend_rejects_non_lattice_map(quad, fano):
    f = embeddings(quad, fano, kind="incidence", limit=1)[0]
    t1, t2 = extend(quad, 2), extend(fano, 2)
    with pytest.raises(PreconditionError) as exc:
        extend_embedding(f, t1, t2, 2)
    assert exc.value.witness is not None


def test_extend_rejects_mode_and_stage_mismatch(quad):
    from freeplane import ExtensionMode

    t_full = extend(quad, 2)
    t_meets = extend(quad, 2, mode=ExtensionMode.MEETS_ONLY)
    f = identity_morphism(quad)
    with pytest.raises(PreconditionError):
        extend_embedding(f, t_full, t_meets, 2)
    with pytest.raises(PreconditionError):
        extend_embedding(f, t_full, t_full, 9)


def test_completeness_witness(quad, fano):
    f = embeddings(quad, fano, kind="incidence", limit=1)[0]
    bad = completeness_witness(f, quad, fano)
    assert bad is not None and bad[0] in ("meet", "join")
    ident = identity_morphism(fano)
    assert completeness_witness(ident, fano, fano) is None


# -- restriction ---------------------------------------------------------


def test_restriction_fano(fano):
    trace = extend(fano, 3)
    report = check_restriction(trace, trace, 3, 3)
    assert report.passed()
    byname = {(r.check, r.subject): r for r in report.results}
    assert byname[("confined", "a")].passed
    assert "168" in byname[("restriction", "F_3(a)->F_3(b)")].detail


def test_restriction_quad_vacuous(quad):
    trace = extend(quad, 1)
    report = check_restriction(trace, trace, 1, 1)
    failed = {(r.check, r.subject) for r in report.failures()}
    assert failed == {("confined", "a"), ("confined", "b")}
    byname = {(r.check, r.subject): r for r in report.results}
    assert byname[("core-identity", "a")].passed


# -- SPB / fullness ------------------------------------------------------


def test_spb_identity_passes(two_points, path3, triangle, rigid):
    report = spb_check(
        get_encoder("identity"), spb_instances(two_points, path3, triangle, rigid)
    )
    assert report.passed()
    checks = {r.check for r in report.results}
    assert checks == {
        "aut-isomorphism",
        "iso-preservation",
        "embed-forward",
        "embed-backward",
    }


def test_spb_naive_fails_with_witness(two_points, path3, triangle, rigid):
    report = spb_check(
        get_encoder("naive"), spb_instances(two_points, path3, triangle, rigid)
    )
    assert not report.passed()
    failed = {(r.check, r.subject) for r in report.failures()}
    assert ("aut-isomorphism", "path3") in failed
    for r in report.failures():
        if r.check == "aut-isomorphism":
            assert r.witness["order"] != r.witness["encoded_order"]


def test_spb_broken_fails_on_symmetric_inputs(two_points, path3, triangle, rigid):
    report = spb_check(
        get_encoder("broken"), spb_instances(two_points, path3, triangle, rigid)
    )
    failed = {(r.check, r.subject) for r in report.failures()}
    assert ("aut-isomorphism", "two_points") in failed
    assert ("aut-isomorphism", "triangle") in failed


def test_fullness_counts(two_points):
    pmap = {"u": "s", "v": "t"}
    R = IncidenceStructure.build(list(pmap.values()), {})
    a, b, ok = fullness_check(get_encoder("identity"), two_points, R)
    assert (a, b, ok) == (2, 2, True)
    a, b, ok = fullness_check(get_encoder("broken"), two_points, R)
    assert (a, b, ok) == (2, 4, False)


def test_report_serializes(two_points, path3, triangle, rigid):
    report = spb_check(
        get_encoder("identity"),
        spb_instances(two_points, path3, triangle, rigid),
    )
    d = report.to_dict()
    assert d["encoder"] == "identity"
    assert d["passed"] is True
    assert all("check" in r for r in d["results"])
