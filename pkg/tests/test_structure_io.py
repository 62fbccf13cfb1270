import pytest

from freeplane import (
    IncidenceStructure,
    ParseError,
    StructureError,
    dumps_structure,
    loads_structure,
)
from freeplane import terms as T
from freeplane.serialization import incidence_dot


def test_disjoint_identifier_sets():
    with pytest.raises(StructureError):
        IncidenceStructure.build(["x"], {"x": []})


def test_dangling_incidence_rejected():
    with pytest.raises(StructureError):
        IncidenceStructure([T.base("p")], [T.base("l")], [("q", "l")])


def test_reserved_names_rejected():
    with pytest.raises(ParseError):
        IncidenceStructure.build(["0"], {})
    with pytest.raises(ParseError):
        loads_structure('{"points": ["1"], "lines": []}')


def test_term_canonical_argument_order():
    a, b = T.base("b"), T.base("a")
    assert T.meet(a, b).name == "meet(a,b)"
    assert T.join(a, b).name == T.join(b, a).name


def test_term_stage_invariant():
    a, b = T.base("a"), T.base("b")
    with pytest.raises(ValueError):
        T.Term("meet", args=(a, b), stage=0)


def test_json_round_trip(fano, quad, mk8):
    for S in (fano, quad, mk8):
        text = dumps_structure(S)
        assert loads_structure(text, strict=True) == S
        # canonical output is a fixed point
        assert dumps_structure(loads_structure(text)) == text


def test_generated_elements_round_trip(quad):
    from freeplane import extend

    trace = extend(quad, 2)
    S = trace.stages[2]
    text = dumps_structure(S)
    S2 = loads_structure(text, strict=True)
    assert S2 == S
    assert any(S2.term[p].kind == "meet" for p in S2.points)


def test_strict_rejects_unknown_fields():
    with pytest.raises(ParseError):
        loads_structure('{"points": [], "lines": [], "extra": 1}', strict=True)
    loads_structure('{"points": [], "lines": [], "extra": 1}')  # lenient ok


def test_strict_requires_stage_for_generated(quad):
    text = (
        '{"points": ["A", "B", {"name": "meet(l1,l2)"}],'
        ' "lines": [{"name": "l1", "points": ["A"]},'
        ' {"name": "l2", "points": ["B"]}]}'
    )
    with pytest.raises(ParseError):
        loads_structure(text, strict=True)
    S = loads_structure(text)
    assert S.term["meet(l1,l2)"].stage == 1


def test_malformed_json_carries_location():
    with pytest.raises(ParseError) as exc:
        loads_structure("{nope}")
    assert exc.value.line == 1


def test_unknown_argument_in_term():
    with pytest.raises(ParseError):
        loads_structure('{"points": [{"name": "meet(a,b)", "stage": 1}], "lines": []}')


def test_dot_output_deterministic(quad):
    assert incidence_dot(quad) == incidence_dot(quad)
    assert '"A" -- "AB";' in incidence_dot(quad)
