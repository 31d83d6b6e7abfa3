"""Bundled example diagrams, polylines and PD codes with expected values.

Entries live as JSON data files so other implementations can reuse them
byte-for-byte; tools/build_corpus.py regenerates and re-verifies them.
Every expected value carries a provenance tag naming how it was obtained
(worked-example, hand-count, trivial, resolution-consistency, or one of
the oracles).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .errors import UnknownEntry, ValidationError
from .files import diagram_from_obj, polyline_from_obj
from .pd import parse_pd

_PACKAGE = "gaussforge.corpus_data"


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    payload_type: str  # "diagram" | "polyline" | "pd"
    payload: object
    expected: dict
    provenance: dict
    aux: dict


def _data_dir():
    return resources.files(_PACKAGE)


def corpus_list() -> list[str]:
    names = []
    for entry in _data_dir().iterdir():
        if entry.name.endswith(".json"):
            names.append(entry.name[: -len(".json")])
    return sorted(names)


def corpus_raw(name: str) -> dict:
    """The entry's JSON object, exactly as stored."""
    try:
        text = (_data_dir() / f"{name}.json").read_text(encoding="utf-8")
    except (FileNotFoundError, KeyError):
        raise UnknownEntry(name) from None
    return json.loads(text)


def corpus_get(name: str) -> CorpusEntry:
    obj = corpus_raw(name)
    ptype = obj["payload_type"]
    if ptype == "diagram":
        payload = diagram_from_obj(obj["payload"])
    elif ptype == "polyline":
        payload = polyline_from_obj(obj["payload"])
    elif ptype == "pd":
        payload = parse_pd(obj["payload"])
    else:
        raise ValidationError(f"entry {name} has unknown payload type {ptype!r}")
    return CorpusEntry(
        name=obj["name"],
        payload_type=ptype,
        payload=payload,
        expected=obj["expected"],
        provenance=obj["provenance"],
        aux=obj.get("aux", {}),
    )
