"""Encoders checked by the harness: plugins mapping structures to structures.

Only calibration encoders ship here: the identity, a naive graph-style
encoder, and a deliberately broken one.  External encoders are invoked as
subprocesses speaking structure JSON on stdin/stdout.
"""

from __future__ import annotations

import subprocess
from typing import Callable

from . import terms as T
from .errors import EncoderError
from .serialization import dumps_structure, loads_structure
from .structure import IncidenceStructure


class Encoder:
    """A named deterministic structure transformation."""

    name = "encoder"
    version = "1"

    def __call__(self, S: IncidenceStructure) -> IncidenceStructure:
        raise NotImplementedError

    def check_deterministic(self, S: IncidenceStructure):
        a, b = self(S), self(S)
        if a != b:
            raise EncoderError(f"encoder {self.name!r} is non-deterministic")
        return a


class IdentityEncoder(Encoder):
    name = "identity"

    def __call__(self, S: IncidenceStructure) -> IncidenceStructure:
        return S


class NaiveGraphEncoder(Encoder):
    """Adds one new point per line and puts it on that line.

    Reading the input as a graph (points = vertices, 2-point lines =
    edges), each edge {u, v} becomes a 3-point line {u, v, edge-point}.
    """

    name = "naive"

    def __call__(self, S: IncidenceStructure) -> IncidenceStructure:
        pterms = [S.term[p] for p in S.points]
        inc = list(S.incidence)
        for l in S.lines:
            t = T.base(f"ep_{l}")
            pterms.append(t)
            inc.append((t.name, l))
        return IncidenceStructure(pterms, [S.term[l] for l in S.lines], inc)


class BrokenEncoder(Encoder):
    """Appends a fixed asymmetric gadget hanging off the first point.

    The gadget (one line through the anchor and a new point, plus one
    isolated point) changes the automorphism group of symmetric inputs,
    so the stabilizer-preservation checks catch it.
    """

    name = "broken"

    def __call__(self, S: IncidenceStructure) -> IncidenceStructure:
        pterms = [S.term[p] for p in S.points]
        lterms = [S.term[l] for l in S.lines]
        inc = list(S.incidence)
        g1, g2 = T.base("gadget_a"), T.base("gadget_b")
        gl = T.base("gadget_line")
        pterms += [g1, g2]
        lterms.append(gl)
        inc.append((g1.name, gl.name))
        if S.points:
            inc.append((S.points[0], gl.name))
        return IncidenceStructure(pterms, lterms, inc)


class PluginEncoder(Encoder):
    """Wraps an external executable: structure JSON in, structure JSON out."""

    def __init__(self, path: str):
        self.path = path
        self.name = f"plugin:{path}"

    def __call__(self, S: IncidenceStructure) -> IncidenceStructure:
        try:
            proc = subprocess.run(
                [self.path],
                input=dumps_structure(S),
                capture_output=True,
                text=True,
                check=True,
            )
        except (OSError, subprocess.CalledProcessError) as exc:
            raise EncoderError(f"plugin {self.path!r} failed: {exc}") from exc
        try:
            return loads_structure(proc.stdout)
        except Exception as exc:
            raise EncoderError(
                f"plugin {self.path!r} emitted invalid structure JSON: {exc}"
            ) from exc


def get_encoder(spec: str) -> Encoder:
    if spec == "identity":
        return IdentityEncoder()
    if spec == "naive":
        return NaiveGraphEncoder()
    if spec == "broken":
        return BrokenEncoder()
    if spec.startswith("plugin:"):
        return PluginEncoder(spec.split(":", 1)[1])
    raise EncoderError(f"unknown encoder {spec!r}")
