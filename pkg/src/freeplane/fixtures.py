"""Shared ground-truth structures used by the CLI fixtures and the tests."""

from __future__ import annotations

from .structure import IncidenceStructure

FANO_LINES = {
    "L013": ["p0", "p1", "p3"],
    "L124": ["p1", "p2", "p4"],
    "L235": ["p2", "p3", "p5"],
    "L346": ["p3", "p4", "p6"],
    "L450": ["p4", "p5", "p0"],
    "L561": ["p5", "p6", "p1"],
    "L602": ["p6", "p0", "p2"],
}


def fano() -> IncidenceStructure:
    """The projective plane of order 2: 7 points, 7 lines, 3 points per line."""
    return IncidenceStructure.build([f"p{i}" for i in range(7)], FANO_LINES)


def quad() -> IncidenceStructure:
    """Four points in general position with all six joining 2-point lines."""
    points = ["A", "B", "C", "D"]
    lines = {
        "AB": ["A", "B"],
        "AC": ["A", "C"],
        "AD": ["A", "D"],
        "BC": ["B", "C"],
        "BD": ["B", "D"],
        "CD": ["C", "D"],
    }
    return IncidenceStructure.build(points, lines)


def star() -> IncidenceStructure:
    """One center on three 3-point lines; the only exceptional point."""
    points = ["z", "a1", "a2", "b1", "b2", "c1", "c2"]
    lines = {
        "la": ["z", "a1", "a2"],
        "lb": ["z", "b1", "b2"],
        "lc": ["z", "c1", "c2"],
    }
    return IncidenceStructure.build(points, lines)


def mobius_kantor() -> IncidenceStructure:
    """The (8_3) configuration: confined but not projective.

    Cyclic construction with block {0, 1, 3} mod 8; pairs at difference 4
    are uncollinear, so four parallel line pairs exist.
    """
    points = [f"q{i}" for i in range(8)]
    lines = {
        f"m{i}": [f"q{i}", f"q{(i + 1) % 8}", f"q{(i + 3) % 8}"] for i in range(8)
    }
    return IncidenceStructure.build(points, lines)


def rigid() -> IncidenceStructure:
    """A small structure with trivial automorphism group."""
    points = ["r1", "r2", "r3", "r4", "r5"]
    lines = {
        "k1": ["r1", "r2", "r3"],
        "k2": ["r1", "r4"],
        "k3": ["r2", "r4"],
        "k4": ["r1", "r5"],
    }
    return IncidenceStructure.build(points, lines)


def two_points() -> IncidenceStructure:
    """Two isolated points; automorphism group of order two."""
    return IncidenceStructure.build(["u", "v"], {})


def path3() -> IncidenceStructure:
    """The path graph on three vertices, viewed as points and 2-point lines."""
    return IncidenceStructure.build(
        ["v1", "v2", "v3"], {"e12": ["v1", "v2"], "e23": ["v2", "v3"]}
    )


def triangle() -> IncidenceStructure:
    """The triangle graph as a structure: symmetric under all of S3."""
    return IncidenceStructure.build(
        ["t1", "t2", "t3"],
        {"e12": ["t1", "t2"], "e13": ["t1", "t3"], "e23": ["t2", "t3"]},
    )


FIXTURES = {
    "fano": fano,
    "quad": quad,
    "star": star,
    "mobius_kantor": mobius_kantor,
    "rigid": rigid,
    "two_points": two_points,
    "path3": path3,
    "triangle": triangle,
}


def get(name: str) -> IncidenceStructure:
    return FIXTURES[name]()
