"""Polygon JSON: canonical on write, tolerant on read.

Layout::

    {"n": 5, "offset": "0" | "1/2",
     "vertices": [["p/q", "p/q", "p/q"], ...],
     "monodromy": [["p/q", ...], ...]}
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List

from .errors import ParseError
from .exact import HPoint, ProjMap, primitive, rat, rat_str
from .polygon import TwistedPolygon


def _parse_rat(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError(f"{where}: expected a rational string, got {value!r}")
    try:
        return rat(value)
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from None


def _triple(row: Any, where: str) -> List[Fraction]:
    if not isinstance(row, list) or len(row) != 3:
        raise ParseError(f"{where}: expected a list of 3 rationals")
    return [_parse_rat(v, f"{where}[{i}]") for i, v in enumerate(row)]


def polygon_to_dict(A: TwistedPolygon) -> Dict[str, Any]:
    return {
        "n": A.n,
        "offset": rat_str(A.offset),
        "vertices": [[rat_str(c) for c in primitive(v.coords)] for v in A.vertices],
        "monodromy": [[rat_str(c) for c in row] for row in A.monodromy.matrix],
    }


def polygon_from_dict(data: Any) -> TwistedPolygon:
    if not isinstance(data, dict):
        raise ParseError("$: expected an object")
    for key in ("n", "offset", "vertices", "monodromy"):
        if key not in data:
            raise ParseError(f"$: missing key {key!r}")
    offset = _parse_rat(data["offset"], "$.offset")
    if offset not in (0, Fraction(1, 2)):
        raise ParseError("$.offset: must be 0 or 1/2")
    verts = data["vertices"]
    if not isinstance(verts, list):
        raise ParseError("$.vertices: expected a list")
    points = []
    for i, row in enumerate(verts):
        coords = _triple(row, f"$.vertices[{i}]")
        if not any(coords):
            raise ParseError(f"$.vertices[{i}]: zero vector")
        points.append(HPoint(tuple(coords)))
    if data["n"] != len(points):
        raise ParseError(f"$.n: {data['n']!r} does not match {len(points)} vertices")
    mono = data["monodromy"]
    if not isinstance(mono, list) or len(mono) != 3:
        raise ParseError("$.monodromy: expected a 3x3 array")
    rows = tuple(tuple(_triple(r, f"$.monodromy[{i}]")) for i, r in enumerate(mono))
    try:
        phi = ProjMap(rows)
        return TwistedPolygon(tuple(points), phi, offset)
    except ValueError as exc:
        raise ParseError(f"$: {exc}") from None


def dumps_polygon(A: TwistedPolygon) -> str:
    return json.dumps(polygon_to_dict(A), indent=2)


def loads_polygon(text: str) -> TwistedPolygon:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return polygon_from_dict(data)
