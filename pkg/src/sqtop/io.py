"""Text and JSON formats, and the registry of named complexes.

Complex text format::

    # comment
    vertices 6
    facet 1 2 3
    facet 1 2 6

JSON format: ``{"vertices": 6, "facets": [[1, 2, 3], ...]}``.

A cochain file lists one simplex per line (``1 4`` or ``[1,4]``); the lines
are summed, so repeated simplices cancel.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .cohomology import Cochain
from .complex import (
    P26,
    SimplicialComplex,
    boundary,
    cone,
    cycle,
    empty,
    from_facets,
    path,
    points,
    simplex,
)
from .errors import InvalidInput

__all__ = [
    "REGISTRY",
    "named",
    "parse_complex_text",
    "complex_to_text",
    "parse_complex_json",
    "complex_from_dict",
    "complex_to_json",
    "complex_to_dict",
    "load_complex",
    "parse_cochain",
    "load_cochain",
    "format_simplex",
    "format_cochain",
]

REGISTRY = {
    "P26": "6-vertex triangulation of the real projective plane",
    "simplex:n": "full n-simplex on n+1 vertices",
    "boundary:n": "boundary of the n-simplex",
    "points:k": "k disjoint points",
    "cycle:n": "n-gon, n >= 3",
    "path:n": "path graph on n vertices",
    "empty:m": "the complex {∅} with m ghost vertices",
    "point": "a single point",
    "cone:NAME": "cone over a named complex",
}

_BUILDERS = {
    "simplex": simplex,
    "boundary": boundary,
    "points": points,
    "cycle": cycle,
    "path": path,
    "empty": empty,
}


def named(name: str) -> SimplicialComplex:
    """Build a complex from a registry name such as ``boundary:3``."""
    name = name.strip()
    if name.upper() == "P26":
        return P26()
    if name == "point":
        return points(1)
    head, _, param = name.partition(":")
    if head == "cone" and param:
        return cone(named(param))
    builder = _BUILDERS.get(head)
    if builder is None or not param:
        raise InvalidInput(f"unknown complex {name!r}; known names: {', '.join(REGISTRY)}")
    try:
        value = int(param)
    except ValueError:
        raise InvalidInput(f"parameter of {head} must be an integer, got {param!r}") from None
    return builder(value)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_complex_text(text: str) -> SimplicialComplex:
    m = None
    facets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        word, *rest = line.split()
        try:
            nums = [int(t) for t in rest]
        except ValueError:
            raise InvalidInput(f"line {lineno}: expected integers, got {raw.strip()!r}") from None
        if word == "vertices":
            if m is not None or len(nums) != 1:
                raise InvalidInput(f"line {lineno}: expected a single 'vertices m' line")
            m = nums[0]
        elif word == "facet":
            if m is None:
                raise InvalidInput(f"line {lineno}: 'facet' before 'vertices'")
            facets.append(nums)
        else:
            raise InvalidInput(f"line {lineno}: unknown keyword {word!r}")
    if m is None:
        raise InvalidInput("missing 'vertices m' line")
    return from_facets(m, facets)


def complex_to_text(K: SimplicialComplex) -> str:
    lines = [f"vertices {K.m}"]
    lines += ["facet " + " ".join(map(str, f)) if f else "facet" for f in K.facets]
    return "\n".join(lines) + "\n"


def complex_from_dict(data) -> SimplicialComplex:
    if not isinstance(data, dict) or "vertices" not in data or "facets" not in data:
        raise InvalidInput('complex JSON needs "vertices" and "facets"')
    facets = data["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise InvalidInput('"facets" must be a list of vertex lists')
    return from_facets(data["vertices"], facets)


def parse_complex_json(text: str) -> SimplicialComplex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"bad JSON: {exc}") from None
    return complex_from_dict(data)


def complex_to_dict(K: SimplicialComplex) -> dict:
    return {"vertices": K.m, "facets": [list(f) for f in K.facets]}


def complex_to_json(K: SimplicialComplex) -> str:
    return json.dumps(complex_to_dict(K))


def load_complex(spec: str) -> SimplicialComplex:
    """A complex from a file path (text or JSON) or a registry name."""
    p = Path(spec)
    if p.is_file():
        text = p.read_text(encoding="utf-8")
        if text.lstrip().startswith("{"):
            return parse_complex_json(text)
        return parse_complex_text(text)
    return named(spec)


_SIMPLEX = re.compile(r"[\[\]\s,]+")


def parse_cochain(text: str, K: SimplicialComplex, degree: int | None = None) -> Cochain:
    simplices = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if line.endswith("*"):
            line = line[:-1]
        try:
            simplices.append([int(t) for t in _SIMPLEX.split(line) if t])
        except ValueError:
            raise InvalidInput(f"line {lineno}: cannot read simplex {raw.strip()!r}") from None
    if not simplices and degree is None:
        raise InvalidInput("empty cochain file; its degree cannot be inferred")
    return Cochain.from_simplices(K, simplices, degree)


def load_cochain(path: str, K: SimplicialComplex, degree: int | None = None) -> Cochain:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"cannot read cochain file {path}: {exc.strerror}") from None
    return parse_cochain(text, K, degree)


def format_simplex(s) -> str:
    return "[" + ",".join(map(str, s)) + "]"


def format_cochain(c: Cochain) -> str:
    """One simplex per line; the zero cochain prints as ``0``."""
    if c.is_zero():
        return "0"
    return "\n".join(format_simplex(s) for s in c.simplices())
