"""File formats: point files with exact-rational coordinate strings."""

from __future__ import annotations

import json

from .geometry import Point, PointSet, format_rational


def points_to_json(ps: PointSet) -> str:
    doc = {"points": [{"x": format_rational(p.x), "y": format_rational(p.y)} for p in ps]}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def points_from_json(text: str) -> PointSet:
    doc = json.loads(text)
    return PointSet(Point.of(rec["x"], rec["y"]) for rec in doc["points"])
