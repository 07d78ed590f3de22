"""Curated links with diagrams, C-complexes and expected values.

Entries are JSON files in the package ``data`` directory, or in the directory
named by ``NABLA_DATASET_DIR`` when it is set.  Expected values carry a
provenance tag: ``published-example``, ``hand-derived`` or ``pipeline``.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from pathlib import Path

from .ccomplex import CComplexData
from .diagrams import ColoredDiagram, from_braid, parse_pd
from .laurent import LaurentPoly, PotentialValue

__all__ = [
    "DatasetEntry",
    "entry_from_json",
    "dataset_dir",
    "load_dataset",
    "get_entry",
    "PROVENANCES",
]

PROVENANCES = ("published-example", "hand-derived", "pipeline")

_TERM = re.compile(r"([+-]?)(\d*)\*?(t)?(?:\^(-?\d+))?")
_POLY = re.compile(r"(?:[+-]?(?:\d+\*?t(?:\^-?\d+)?|\d+|t(?:\^-?\d+)?))+")


def dataset_dir() -> Path:
    env = os.environ.get("NABLA_DATASET_DIR")
    if env:
        return Path(env)
    return Path(__file__).with_name("data")


def _parse_t_poly(text):
    """Parse a one-variable value such as ``t^2 - 1 + t^-2``."""
    s = text.replace(" ", "")
    if s == "0":
        return LaurentPoly.zero(1)
    if not _POLY.fullmatch(s):
        raise ValueError("cannot parse %r" % text)
    terms = {}
    for m in _TERM.finditer(s):
        if not m.group(0):
            continue
        sign, num, var, exp = m.groups()
        coeff = int(num) if num else 1
        e = (int(exp) if exp else 1) if var else 0
        if sign == "-":
            coeff = -coeff
        terms[(e,)] = terms.get((e,), 0) + coeff
    return LaurentPoly(1, terms)


@dataclass(frozen=True)
class Expected:
    quantity: str
    value: object
    provenance: str
    of: str = ""

    def to_json(self):
        v = self.value.to_json() if hasattr(self.value, "to_json") else self.value
        if isinstance(self.value, LaurentPoly):
            v = self.value.format()
        out = {"quantity": self.quantity, "value": v, "provenance": self.provenance}
        if self.of:
            out["of"] = self.of
        return out


@dataclass(frozen=True)
class DatasetEntry:
    id: str
    name: str
    mu: int
    diagram: ColoredDiagram
    ccomplexes: dict
    expected: tuple
    linking_numbers: tuple = ()
    ordered_colors: tuple = ()
    summands: tuple = ()
    torres: dict = field(default=None, compare=False)
    raw: dict = field(default=None, compare=False, repr=False)

    def potential_expected(self, label):
        for e in self.expected:
            if e.quantity == "potential" and e.of == label:
                return e.value
        return None

    def conway_expected(self):
        for e in self.expected:
            if e.quantity == "conway_D":
                return e.value
        return None

    def ordered_diagram(self):
        if not self.ordered_colors:
            return None
        return self.diagram.recolor(self.ordered_colors)

    def to_json(self):
        return self.raw


def _diagram(desc):
    colors = desc.get("colors")
    if "braid" in desc:
        return from_braid(desc["braid"], colors=colors)
    d = parse_pd(desc["pd"])
    return d.recolor(colors) if colors else d


def entry_from_json(obj) -> DatasetEntry:
    try:
        cc = {c["label"]: CComplexData.from_json(c["data"]) for c in obj.get("ccomplexes", [])}
        exp = []
        for e in obj.get("expected", []):
            if e["provenance"] not in PROVENANCES:
                raise ValueError("unknown provenance %r" % e["provenance"])
            if e["quantity"] == "potential":
                val = PotentialValue.from_json(e["value"])
            else:
                val = _parse_t_poly(e["value"])
            exp.append(Expected(e["quantity"], val, e["provenance"], e.get("of", "")))
        return DatasetEntry(
            id=obj["id"], name=obj["name"], mu=int(obj["mu"]),
            diagram=_diagram(obj["diagram"]), ccomplexes=cc, expected=tuple(exp),
            linking_numbers=tuple(tuple(x) for x in obj.get("linking_numbers", [])),
            ordered_colors=tuple(obj.get("ordered_colors", [])),
            summands=tuple(obj.get("summands", [])), torres=obj.get("torres"),
            raw=obj)
    except (KeyError, TypeError) as exc:
        raise ValueError("malformed dataset entry: %s" % exc) from None


def load_dataset(directory=None) -> dict:
    """All entries keyed by id, in file-name order."""
    root = Path(directory) if directory else dataset_dir()
    out = {}
    for path in sorted(root.glob("*.json")):
        with open(path) as f:
            e = entry_from_json(json.load(f))
        out[e.id] = e
    return out


def get_entry(entry_id, directory=None) -> DatasetEntry:
    ds = load_dataset(directory)
    if entry_id not in ds:
        raise KeyError("no dataset entry %r" % entry_id)
    return ds[entry_id]
