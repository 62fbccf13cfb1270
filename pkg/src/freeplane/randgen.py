"""Seeded random structure generators for tests and calibration runs.

The seed only affects test-data generation, never core algorithms.
"""

from __future__ import annotations

import random
from typing import Optional

from .structure import IncidenceStructure


def random_structure(
    rng: random.Random,
    max_points: int = 10,
    max_lines: int = 10,
    density: float = 0.3,
) -> IncidenceStructure:
    """An arbitrary well-formed structure; may violate any plane axiom."""
    n_points = rng.randint(0, max_points)
    n_lines = rng.randint(0, max_lines)
    points = [f"P{i}" for i in range(n_points)]
    lines = {}
    for j in range(n_lines):
        members = [p for p in points if rng.random() < density]
        lines[f"G{j}"] = members
    return IncidenceStructure.build(points, lines)


def random_linear_structure(
    rng: random.Random,
    max_points: int = 10,
    max_lines: int = 10,
    density: float = 0.3,
) -> IncidenceStructure:
    """A random partial linear space: the at-most-one laws hold.

    Lines are random point subsets, rejected whenever they would put a
    point pair on two lines (which also rules out duplicate 2+-point
    intersections between lines).
    """
    n_points = rng.randint(0, max_points)
    n_lines = rng.randint(0, max_lines)
    points = [f"P{i}" for i in range(n_points)]
    used_pairs = set()
    lines = {}
    j = 0
    for _ in range(n_lines):
        members = sorted({p for p in points if rng.random() < density})
        pairs = {
            (members[a], members[b])
            for a in range(len(members))
            for b in range(a + 1, len(members))
        }
        if pairs & used_pairs:
            continue
        used_pairs |= pairs
        lines[f"G{j}"] = members
        j += 1
    return IncidenceStructure.build(points, lines)
