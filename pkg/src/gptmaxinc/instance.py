"""JSON instance files.

Rationals are always strings (``"-3/4"``, ``"2"``); complex matrix entries
are ``[re, im]`` pairs of such strings. Example::

    {
      "name": "square",
      "vertices": [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]],
      "effects": {"f": {"a": ["1", "0"], "b": "0"},
                  "g": {"values": ["0", "0", "1", "1"]}},
      "sets": {"E0": [["0", "0"]], "E1": [["1", "0"]]}
    }

``values`` are listed in the order of the irredundant vertex list.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .channel import ChannelWitnessCase, HermitianMatrix
from .exactmath import format_rational, parse_rational
from .gpt import Effect, StateSpace, effect_from_functional, effect_from_vertex_values
from .zoo import ZOO


class SchemaError(ValueError):
    """Malformed instance file; the message starts with the offending field path."""

    def __init__(self, path: str, msg: str):
        super().__init__(f"{path}: {msg}")
        self.path = path


CHANNEL_KEYS = ("C00", "C10", "C01", "C11", "M", "N", "sigma_M", "sigma_N")


@dataclass
class InstanceFile:
    vertices: list
    effects: dict = field(default_factory=dict)
    sets: dict = field(default_factory=dict)
    channel: Optional[ChannelWitnessCase] = None
    name: Optional[str] = None
    note: Optional[str] = None

    def space(self) -> StateSpace:
        if not self.vertices:
            raise SchemaError("vertices", "no state space in this file")
        try:
            return StateSpace.from_vertices(self.vertices)
        except ValueError as exc:
            raise SchemaError("vertices", str(exc)) from None

    def effect(self, name: str, K: Optional[StateSpace] = None) -> Effect:
        K = K or self.space()
        if name not in self.effects:
            raise SchemaError(f"effects.{name}", "no such effect")
        entry = self.effects[name]
        try:
            if "values" in entry:
                return effect_from_vertex_values(K, entry["values"])
            return effect_from_functional(K, entry["a"], entry["b"])
        except ValueError as exc:
            raise SchemaError(f"effects.{name}", str(exc)) from None

    def point_set(self, name: str) -> list:
        if name not in self.sets:
            raise SchemaError(f"sets.{name}", "no such point set")
        return self.sets[name]


def _rat(x, path):
    try:
        return parse_rational(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(path, str(exc)) from None


def _vector(x, path):
    if not isinstance(x, list) or not x:
        raise SchemaError(path, "expected a nonempty list of rational strings")
    return tuple(_rat(c, f"{path}[{i}]") for i, c in enumerate(x))


def _points(x, path):
    if not isinstance(x, list):
        raise SchemaError(path, "expected a list of vectors")
    return [_vector(p, f"{path}[{i}]") for i, p in enumerate(x)]


def _complex(x, path):
    if isinstance(x, list) and len(x) == 2:
        return _rat(x[0], f"{path}[0]"), _rat(x[1], f"{path}[1]")
    raise SchemaError(path, "complex entries are [re, im] pairs of rational strings")


def _matrix(x, path):
    if not isinstance(x, list) or not x:
        raise SchemaError(path, "expected a square matrix")
    rows = []
    for i, row in enumerate(x):
        if not isinstance(row, list):
            raise SchemaError(f"{path}[{i}]", "expected a row")
        rows.append(tuple(_complex(z, f"{path}[{i}][{j}]") for j, z in enumerate(row)))
    try:
        return HermitianMatrix(tuple(rows))
    except ValueError as exc:
        raise SchemaError(path, str(exc)) from None


def parse_channel(obj, path="channel") -> ChannelWitnessCase:
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    d = obj.get("d")
    if not isinstance(d, int) or d < 1:
        raise SchemaError(f"{path}.d", "expected a positive integer")
    mats = {}
    for key in CHANNEL_KEYS:
        if key not in obj:
            raise SchemaError(f"{path}.{key}", "missing")
        mats[key] = _matrix(obj[key], f"{path}.{key}")
    return ChannelWitnessCase(d=d, **mats)


def parse_instance(obj) -> InstanceFile:
    if not isinstance(obj, dict):
        raise SchemaError("$", "expected a JSON object")
    verts = _points(obj.get("vertices", []), "vertices")
    effects = {}
    for name, entry in (obj.get("effects") or {}).items():
        path = f"effects.{name}"
        if not isinstance(entry, dict):
            raise SchemaError(path, "expected an object")
        if "values" in entry:
            effects[name] = {"values": _vector(entry["values"], f"{path}.values")}
        elif "a" in entry and "b" in entry:
            effects[name] = {"a": _vector(entry["a"], f"{path}.a"), "b": _rat(entry["b"], f"{path}.b")}
        else:
            raise SchemaError(path, "expected {\"a\", \"b\"} or {\"values\"}")
    sets = {name: _points(pts, f"sets.{name}") for name, pts in (obj.get("sets") or {}).items()}
    channel = parse_channel(obj["channel"]) if "channel" in obj else None
    for key in ("name", "note"):
        if key in obj and not isinstance(obj[key], str):
            raise SchemaError(key, "expected a string")
    return InstanceFile(verts, effects, sets, channel, obj.get("name"), obj.get("note"))


def loads(text: str) -> InstanceFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from None
    return parse_instance(obj)


def load(path) -> InstanceFile:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


# -- emission ---------------------------------------------------------------

def _fmt_vec(v) -> str:
    return "[" + ", ".join(json.dumps(format_rational(c)) for c in v) + "]"


def _fmt_matrix(M: HermitianMatrix, indent: str) -> str:
    rows = []
    for row in M.entries:
        rows.append("[" + ", ".join(
            f"[{json.dumps(format_rational(z[0]))}, {json.dumps(format_rational(z[1]))}]"
            for z in row) + "]")
    return "[\n" + ",\n".join(indent + "  " + r for r in rows) + "\n" + indent + "]"


def dumps(inst: InstanceFile) -> str:
    """Canonical text form: stable key order, one vector per line, trailing newline."""
    parts = []
    if inst.name is not None:
        parts.append(f'  "name": {json.dumps(inst.name)}')
    if inst.note is not None:
        parts.append(f'  "note": {json.dumps(inst.note)}')
    if inst.vertices:
        body = ",\n".join("    " + _fmt_vec(v) for v in inst.vertices)
        parts.append(f'  "vertices": [\n{body}\n  ]')
    if inst.effects:
        items = []
        for name, entry in inst.effects.items():
            if "values" in entry:
                inner = f'"values": {_fmt_vec(entry["values"])}'
            else:
                inner = f'"a": {_fmt_vec(entry["a"])}, "b": {json.dumps(format_rational(entry["b"]))}'
            items.append(f"    {json.dumps(name)}: {{{inner}}}")
        parts.append('  "effects": {\n' + ",\n".join(items) + "\n  }")
    if inst.sets:
        items = []
        for name, pts in inst.sets.items():
            items.append(f"    {json.dumps(name)}: [" + ", ".join(_fmt_vec(p) for p in pts) + "]")
        parts.append('  "sets": {\n' + ",\n".join(items) + "\n  }")
    if inst.channel is not None:
        c = inst.channel
        items = [f'    "d": {c.d}']
        for key in CHANNEL_KEYS:
            items.append(f"    {json.dumps(key)}: {_fmt_matrix(getattr(c, key), '    ')}")
        parts.append('  "channel": {\n' + ",\n".join(items) + "\n  }")
    return "{\n" + ",\n".join(parts) + "\n}\n"


def zoo_instance(name: str) -> InstanceFile:
    if name not in ZOO:
        raise KeyError(f"unknown zoo entry {name!r}; known: {', '.join(ZOO)}")
    e = ZOO[name]
    effects = {k: {"a": tuple(parse_rational(c) for c in v["a"]), "b": parse_rational(v["b"])}
               for k, v in e.effects.items()}
    return InstanceFile([tuple(parse_rational(c) for c in v) for v in e.vertices],
                        effects, {}, None, e.name, e.note)


def channel_instance(case: ChannelWitnessCase, name: str = "qubit-channels") -> InstanceFile:
    return InstanceFile([], {}, {}, case, name, None)
