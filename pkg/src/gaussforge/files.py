"""JSON interchange formats for diagrams and polylines.

Exact rationals travel as "p/q" strings so that ordering data survives
any JSON implementation; floats are normalized to 12 significant digits
before emission, which makes emit -> parse -> emit byte-stable.  Output
ordering is deterministic: crossings sorted by id, passes in stored
order.
"""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .core import Crossing, GaussDiagram, Pass, StrandPoint, build_diagram
from .errors import ValidationError
from .geometry import PolyLink, poly_link

KINDS = ("long_knot", "long_link3")


def _num(x: float) -> float:
    return float(f"{float(x):.12g}")


def format_rational(q: Fraction) -> str:
    return str(q)


def parse_rational(s) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad rational {s!r}") from exc


def diagram_to_obj(diagram: GaussDiagram) -> dict:
    return {
        "kind": diagram.kind,
        "crossings": [
            {
                "id": c.id,
                "passes": [
                    {
                        "strand": p.point.strand,
                        "param": format_rational(p.point.param),
                        "angle": _num(p.angle),
                        "height": format_rational(p.height),
                    }
                    for p in c.passes
                ],
            }
            for c in sorted(diagram.crossings, key=lambda c: c.id)
        ],
    }


def diagram_from_obj(obj) -> GaussDiagram:
    if not isinstance(obj, dict):
        raise ValidationError("diagram file must be a JSON object")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise ValidationError(f"kind must be one of {KINDS}, got {kind!r}")
    crossings = []
    for c in obj.get("crossings", []):
        if not isinstance(c, dict) or "id" not in c:
            raise ValidationError("each crossing needs an 'id'")
        passes = []
        for p in c.get("passes", []):
            try:
                strand = int(p["strand"])
                angle = float(p["angle"])
            except (KeyError, TypeError, ValueError) as exc:
                raise ValidationError(
                    f"bad pass in crossing {c['id']!r}: {p!r}"
                ) from exc
            passes.append(
                Pass(
                    StrandPoint(strand, parse_rational(p.get("param"))),
                    angle,
                    parse_rational(p.get("height")),
                )
            )
        crossings.append(Crossing(str(c["id"]), tuple(passes)))
    return build_diagram(kind, tuple(crossings))


def dumps_diagram(diagram: GaussDiagram) -> str:
    return json.dumps(diagram_to_obj(diagram), indent=2) + "\n"


def loads_diagram(text: str) -> GaussDiagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"not valid JSON: {exc}") from exc
    return diagram_from_obj(obj)


def polyline_to_obj(link: PolyLink) -> dict:
    return {
        "closure": link.closure,
        "components": [
            [[_num(x), _num(y), _num(z)] for x, y, z in comp]
            for comp in link.components
        ],
    }


def polyline_from_obj(obj) -> PolyLink:
    if not isinstance(obj, dict):
        raise ValidationError("polyline file must be a JSON object")
    closure = obj.get("closure")
    comps = obj.get("components")
    if not isinstance(comps, list) or not comps:
        raise ValidationError("polyline needs a nonempty 'components' list")
    try:
        arrays = [np.asarray(c, dtype=float) for c in comps]
    except (TypeError, ValueError) as exc:
        raise ValidationError("components must be lists of [x, y, z]") from exc
    return poly_link(arrays, closure)


def dumps_polyline(link: PolyLink) -> str:
    return json.dumps(polyline_to_obj(link), indent=2) + "\n"


def loads_polyline(text: str) -> PolyLink:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"not valid JSON: {exc}") from exc
    return polyline_from_obj(obj)


def load_diagram(path) -> GaussDiagram:
    with open(path, encoding="utf-8") as fh:
        return loads_diagram(fh.read())


def save_diagram(diagram: GaussDiagram, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_diagram(diagram))


def load_polyline(path) -> PolyLink:
    with open(path, encoding="utf-8") as fh:
        return loads_polyline(fh.read())


def save_polyline(link: PolyLink, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_polyline(link))
