"""Structured output records shared by every CLI command.

A record is a JSON object; sets travel as lists of ``[x, y]`` base-field
codes next to their display strings, so a record can be re-parsed without
the display text and the display text can be re-parsed without the codes.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .gf_ext import ExtElement, ExtField
from .textio import format_element, parse_element

SCHEMA_VERSION = 1


@dataclass
class OutputRecord:
    command: str
    q: int
    p: int
    e: int
    d: int
    irreducible: list[int]
    beta: list[int]
    payload: dict = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    @classmethod
    def for_field(cls, E: ExtField, command: str, payload: dict | None = None) -> "OutputRecord":
        return cls(
            command=command,
            q=E.q,
            p=E.p,
            e=E.e,
            d=E.d,
            irreducible=list(E.base.modulus),
            beta=[E.beta.x, E.beta.y],
            payload=payload or {},
        )

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=1, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        doc = json.loads(text)
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
        return cls(**doc)


def display_key(g: ExtElement):
    """Sort key used for set listings: symmetric y descending, then x descending."""
    F = g.field.base
    if F.e == 1:
        return (-F.symmetric(g.y), -F.symmetric(g.x))
    return (g.y, g.x)


def encode_set(elements) -> dict:
    elems = sorted(elements, key=lambda g: g.index)
    return {
        "elements": [[g.x, g.y] for g in elems],
        "display": [format_element(g) for g in elems],
    }


def decode_set(E: ExtField, doc: dict) -> list[ExtElement]:
    return [E.element(x, y) for x, y in doc["elements"]]


def decode_display(E: ExtField, doc: dict) -> list[ExtElement]:
    return [parse_element(E, s) for s in doc["display"]]
