"""Provenance-carrying element names.

Every element of an incidence structure is named by a term: either a base
name supplied by the user (stage 0), or ``meet(l1,l2)`` / ``join(p1,p2)``
built from earlier terms during a free extension.  Terms are hash-consed
into canonical strings so that a generated element has exactly one name,
independent of how or when it was produced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import ParseError

BASE = "base"
JOIN = "join"
MEET = "meet"

_KIND_RANK = {BASE: 0, JOIN: 1, MEET: 2}

# Reserved for the bounded-lattice view; rejected as user element names.
RESERVED_NAMES = frozenset({"0", "1"})

_BASE_NAME_RE = re.compile(r"[A-Za-z0-9_.\-]+\Z")


@dataclass(frozen=True)
class Term:
    """An element name with provenance.

    kind is one of ``base``, ``join``, ``meet``.  Base terms carry a user
    name and stage 0; generated terms carry two argument terms in canonical
    order and a creation stage strictly greater than both argument stages.
    """

    kind: str
    base_name: Optional[str] = None
    args: Optional[Tuple["Term", "Term"]] = None
    stage: int = 0

    def __post_init__(self):
        if self.kind == BASE:
            if not self.base_name or self.args is not None:
                raise ValueError("base term needs a name and no arguments")
            if self.stage != 0:
                raise ValueError("base terms have stage 0")
        else:
            if self.kind not in (JOIN, MEET) or self.args is None:
                raise ValueError(f"bad term kind {self.kind!r}")
            a, b = self.args
            if self.stage <= max(a.stage, b.stage):
                raise ValueError("generated stage must exceed argument stages")

    def sort_key(self):
        """Total order: stage first, then kind, then name/argument keys."""
        if self.kind == BASE:
            return (self.stage, 0, self.base_name)
        a, b = self.args
        return (self.stage, _KIND_RANK[self.kind], a.sort_key(), b.sort_key())

    @property
    def name(self) -> str:
        if self.kind == BASE:
            return self.base_name
        a, b = self.args
        return f"{self.kind}({a.name},{b.name})"

    def __str__(self):
        return self.name


def base(name: str) -> Term:
    if name in RESERVED_NAMES:
        raise ParseError(f"element name {name!r} is reserved")
    if not _BASE_NAME_RE.match(name):
        raise ParseError(f"invalid base element name {name!r}")
    return Term(BASE, base_name=name)


def _ordered(a: Term, b: Term) -> Tuple[Term, Term]:
    return (a, b) if a.sort_key() <= b.sort_key() else (b, a)


def meet(a: Term, b: Term, stage: Optional[int] = None) -> Term:
    a, b = _ordered(a, b)
    if stage is None:
        stage = max(a.stage, b.stage) + 1
    return Term(MEET, args=(a, b), stage=stage)


def join(a: Term, b: Term, stage: Optional[int] = None) -> Term:
    a, b = _ordered(a, b)
    if stage is None:
        stage = max(a.stage, b.stage) + 1
    return Term(JOIN, args=(a, b), stage=stage)


def _split_args(body: str) -> Tuple[str, str]:
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return body[:i], body[i + 1 :]
    raise ParseError(f"missing top-level comma in {body!r}")


def parse_name(name: str, known: dict, stage: Optional[int] = None) -> Term:
    """Parse a canonical name, resolving argument names in ``known``.

    ``known`` maps element names to already-constructed terms; the
    arguments of a generated element must name existing elements.
    """
    for kind in (MEET, JOIN):
        prefix = kind + "("
        if name.startswith(prefix) and name.endswith(")"):
            left, right = _split_args(name[len(prefix) : -1])
            terms = []
            for part in (left, right):
                if part not in known:
                    raise ParseError(
                        f"{name!r} refers to unknown element {part!r}"
                    )
                terms.append(known[part])
            a, b = terms
            t = meet(a, b, stage=stage) if kind == MEET else join(a, b, stage=stage)
            if t.name != name:
                raise ParseError(
                    f"{name!r} is not in canonical argument order (expected {t.name!r})"
                )
            return t
    return base(name)


def is_generated_name(name: str) -> bool:
    return name.startswith("meet(") or name.startswith("join(")
