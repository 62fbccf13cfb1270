"""Strict JSON structure format, trace format and DOT export.

Structure files look like::

    {
      "points": ["A", {"name": "meet(AB,CD)", "stage": 1}],
      "lines": [
        {"name": "AB", "points": ["A", "B"]},
        {"name": "join(p,q)", "stage": 2, "points": ["p", "q"]}
      ]
    }

Base elements are plain strings (points) or objects without a stage
(lines); generated elements carry their canonical term as the name and a
"stage" field.  Output is canonical: elements sorted by term order, two
space indentation, trailing newline, so identical inputs give
byte-identical outputs.
"""

from __future__ import annotations

import json
from typing import Dict, List

from . import terms as T
from .errors import ParseError
from .extension import ExtensionMode, ExtensionTrace
from .structure import IncidenceStructure


def structure_to_dict(S: IncidenceStructure) -> dict:
    points: List[object] = []
    for p in S.points:
        t = S.term[p]
        if t.kind == T.BASE:
            points.append(p)
        else:
            points.append({"name": p, "stage": t.stage})
    lines = []
    for l in S.lines:
        t = S.term[l]
        entry: Dict[str, object] = {"name": l}
        if t.kind != T.BASE:
            entry["stage"] = t.stage
        entry["points"] = sorted(
            S.line_points[l], key=lambda p: S.term[p].sort_key()
        )
        lines.append(entry)
    return {"points": points, "lines": lines}


def dumps_structure(S: IncidenceStructure) -> str:
    return json.dumps(structure_to_dict(S), indent=2) + "\n"


def structure_from_dict(data: dict, strict: bool = False) -> IncidenceStructure:
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    allowed = {"points", "lines"}
    if strict and set(data) - allowed:
        raise ParseError(f"unknown top-level fields: {sorted(set(data) - allowed)}")
    raw_points = data.get("points", [])
    raw_lines = data.get("lines", [])
    if not isinstance(raw_points, list) or not isinstance(raw_lines, list):
        raise ParseError('"points" and "lines" must be arrays')

    entries = []  # (name, stage-or-None, is_point, line point names)
    for item in raw_points:
        if isinstance(item, str):
            entries.append((item, None, True, None))
        elif isinstance(item, dict):
            if strict and set(item) - {"name", "stage"}:
                raise ParseError(f"unknown point fields in {item!r}")
            if "name" not in item:
                raise ParseError(f"point object without name: {item!r}")
            entries.append((item["name"], item.get("stage"), True, None))
        else:
            raise ParseError(f"bad point entry {item!r}")
    for item in raw_lines:
        if not isinstance(item, dict) or "name" not in item:
            raise ParseError(f"bad line entry {item!r}")
        if strict and set(item) - {"name", "stage", "points"}:
            raise ParseError(f"unknown line fields in {item!r}")
        pts = item.get("points", [])
        if not isinstance(pts, list) or not all(isinstance(p, str) for p in pts):
            raise ParseError(f'line {item["name"]!r} has a bad "points" array')
        entries.append((item["name"], item.get("stage"), False, pts))

    # resolve generated names against already-known terms, shallow first
    known: Dict[str, T.Term] = {}
    pterms, lterms = [], []
    for name, stage, is_point, pts in sorted(
        entries, key=lambda e: (e[0].count("("), e[0])
    ):
        if name in known:
            raise ParseError(f"duplicate element name {name!r}")
        if T.is_generated_name(name):
            if strict and stage is None:
                raise ParseError(f"generated element {name!r} lacks a stage")
            term = T.parse_name(name, known, stage=stage)
        else:
            if stage not in (None, 0):
                raise ParseError(f"base element {name!r} cannot carry stage {stage}")
            term = T.parse_name(name, known)
        known[name] = term
    incidence = []
    for name, stage, is_point, pts in entries:
        if is_point:
            pterms.append(known[name])
        else:
            lterms.append(known[name])
            for p in pts:
                if p not in known:
                    raise ParseError(f"line {name!r} references unknown point {p!r}")
                incidence.append((p, name))
    return IncidenceStructure(pterms, lterms, incidence)


def loads_structure(text: str, strict: bool = False) -> IncidenceStructure:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"malformed JSON: {exc.msg}", line=exc.lineno, column=exc.colno
        ) from exc
    return structure_from_dict(data, strict=strict)


def load_structure(path, strict: bool = False) -> IncidenceStructure:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_structure(fh.read(), strict=strict)


def save_structure(path, S: IncidenceStructure):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_structure(S))


# -- extension traces ----------------------------------------------------


def trace_to_dict(trace: ExtensionTrace) -> dict:
    return {
        "mode": trace.mode.value,
        "budget": trace.budget,
        "requested_stages": trace.requested,
        "stopped_reason": trace.stopped_reason,
        "fixed_point_stage": trace.fixed_point_stage,
        "truncated": trace.truncated,
        "stage_sizes": [list(s) for s in trace.stage_sizes()],
        "stages": [structure_to_dict(s) for s in trace.stages],
    }


def dumps_trace(trace: ExtensionTrace) -> str:
    return json.dumps(trace_to_dict(trace), indent=2) + "\n"


def trace_from_dict(data: dict, strict: bool = False) -> ExtensionTrace:
    stages = [structure_from_dict(s, strict=strict) for s in data["stages"]]
    trace = ExtensionTrace(
        stages=stages,
        mode=ExtensionMode.parse(data["mode"]),
        budget=data["budget"],
        requested=data["requested_stages"],
        stopped_reason=data.get("stopped_reason"),
        fixed_point_stage=data.get("fixed_point_stage"),
        truncated=data.get("truncated", False),
    )
    return trace


def load_trace(path, strict: bool = False) -> ExtensionTrace:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return trace_from_dict(data, strict=strict)


# -- DOT export ----------------------------------------------------------


def _quote(name: str) -> str:
    return '"' + name.replace('"', '\\"') + '"'


def incidence_dot(S: IncidenceStructure, title: str = "incidence") -> str:
    out = [f"graph {_quote(title)} {{"]
    for p in S.points:
        out.append(f"  {_quote(p)} [shape=circle];")
    for l in S.lines:
        out.append(f"  {_quote(l)} [shape=box];")
    for p in S.points:
        for l in sorted(S.point_lines[p], key=lambda x: S.term[x].sort_key()):
            out.append(f"  {_quote(p)} -- {_quote(l)};")
    out.append("}")
    return "\n".join(out) + "\n"


def hasse_dot(L, title: str = "hasse") -> str:
    """Hasse diagram of a bounded length-3 lattice, layered by rank."""
    out = [f"digraph {_quote(title)} {{", "  rankdir=BT;"]
    layers = {
        0: ["0"],
        1: list(L.atoms),
        2: list(L.coatoms),
        3: ["1"],
    }
    for rank in range(4):
        names = " ".join(_quote(n) for n in layers[rank])
        if names:
            out.append(f"  {{ rank=same; {names} }}")
    for a in L.elements:
        for b in L.elements:
            if L.covers(a, b):
                out.append(f"  {_quote(a)} -> {_quote(b)};")
    out.append("}")
    return "\n".join(out) + "\n"
