"""JSON space files and witness files.

A space file looks like::

    {
      "name": "sierpinski",
      "points": ["a", "b"],
      "opens": [[], ["a"], ["a", "b"]]
    }

``points`` may instead be an integer count, in which case the labels are the
integers ``0..n-1``.  ``subbasis`` can replace ``opens``.  An optional
``maps`` list holds ``{"to": <path, inline space or built-in name>,
"assign": {label: label}}`` entries.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .maps import SpaceMap
from .space import Space, TopologyError, generate_topology, iter_points, validate_topology
from .witness import Witness
from .zoo import named_space


class SpaceFileError(ValueError):
    pass


class ParseError(SpaceFileError):
    def __init__(self, message: str, position: str = "$") -> None:
        self.position = position
        super().__init__(f"parse error at {position}: {message}")


class UnknownLabel(SpaceFileError):
    def __init__(self, label: Any, position: str) -> None:
        self.label = label
        super().__init__(f"unknown point label {label!r} at {position}")


class AxiomViolation(SpaceFileError):
    def __init__(self, cause: TopologyError) -> None:
        super().__init__(f"not a topology: {cause}")
        self.__cause__ = cause


_SPACE_KEYS = {"name", "points", "opens", "subbasis", "maps"}


@dataclass(frozen=True)
class SpaceFile:
    name: str | None
    space: Space
    maps: tuple[SpaceMap, ...] = ()


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"line {e.lineno} column {e.colno}") from None


def _labels(doc: dict) -> tuple[tuple[str, ...], bool]:
    points = doc.get("points")
    if isinstance(points, bool) or points is None:
        raise ParseError("'points' must be a count or a list of labels", "$.points")
    if isinstance(points, int):
        if points < 0:
            raise ParseError("negative point count", "$.points")
        return tuple(str(i) for i in range(points)), False
    if not isinstance(points, list):
        raise ParseError("'points' must be a count or a list of labels", "$.points")
    labels = []
    for i, p in enumerate(points):
        if not isinstance(p, (str, int)) or isinstance(p, bool):
            raise ParseError("labels must be strings or integers", f"$.points[{i}]")
        labels.append(str(p))
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate point label", "$.points")
    return tuple(labels), True


def _set_bits(members: Any, index: dict[str, int], position: str) -> int:
    if not isinstance(members, list):
        raise ParseError("a set must be a list of labels", position)
    bits = 0
    for j, label in enumerate(members):
        if isinstance(label, bool) or not isinstance(label, (str, int)):
            raise ParseError("labels must be strings or integers", f"{position}[{j}]")
        key = str(label)
        if key not in index:
            raise UnknownLabel(label, f"{position}[{j}]")
        bits |= 1 << index[key]
    return bits


def space_from_doc(doc: Any) -> tuple[str | None, Space]:
    if not isinstance(doc, dict):
        raise ParseError("a space document must be a JSON object")
    extra = set(doc) - _SPACE_KEYS
    if extra:
        raise ParseError(f"unexpected key {sorted(extra)[0]!r}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("'name' must be a string", "$.name")
    labels, named = _labels(doc)
    if ("opens" in doc) == ("subbasis" in doc):
        raise ParseError("exactly one of 'opens' and 'subbasis' is required")
    key = "opens" if "opens" in doc else "subbasis"
    family = doc[key]
    if not isinstance(family, list):
        raise ParseError(f"'{key}' must be a list of sets", f"$.{key}")
    index = {label: i for i, label in enumerate(labels)}
    bits = [_set_bits(m, index, f"$.{key}[{i}]") for i, m in enumerate(family)]
    n = len(labels)
    try:
        if key == "opens":
            space = validate_topology(n, bits, labels if named else None)
        else:
            space = generate_topology(n, bits, labels if named else None)
    except TopologyError as e:
        raise AxiomViolation(e) from e
    return name, space


def parse_space_file(text: str) -> Space:
    """Parse a space document; label order in the file fixes point indices."""
    return space_from_doc(_loads(text))[1]


def parse_set(s: Space, labels: list[Any]) -> int:
    index = {label: i for i, label in enumerate(s.point_labels())}
    return _set_bits(list(labels), index, "set")


def resolve_space(ref: Any, base: Path | None = None) -> Space:
    """A space from an inline document, a file path or a built-in name."""
    if isinstance(ref, dict):
        return space_from_doc(ref)[1]
    if not isinstance(ref, str):
        raise ParseError("space reference must be a path, a name or an object")
    path = Path(ref) if base is None else base / ref
    if path.exists():
        return load_space_file(path).space
    try:
        return named_space(ref)
    except KeyError:
        raise SpaceFileError(f"no space file or built-in space named {ref!r}") from None


def map_from_assign(dom: Space, cod: Space, assign: Any, position: str = "assign") -> SpaceMap:
    """Build a map from a ``{label: label}`` table or a list of codomain labels."""
    dom_index = {label: i for i, label in enumerate(dom.point_labels())}
    cod_index = {label: i for i, label in enumerate(cod.point_labels())}
    if isinstance(assign, list):
        if len(assign) != dom.n:
            raise ParseError(f"expected {dom.n} values", position)
        pairs = list(zip(dom.point_labels(), assign))
    elif isinstance(assign, dict):
        pairs = list(assign.items())
    else:
        raise ParseError("assign must be a table or a list", position)
    table: list[int | None] = [None] * dom.n
    for src, dst in pairs:
        if str(src) not in dom_index:
            raise UnknownLabel(src, position)
        if str(dst) not in cod_index:
            raise UnknownLabel(dst, position)
        table[dom_index[str(src)]] = cod_index[str(dst)]
    missing = [dom.label(x) for x, y in enumerate(table) if y is None]
    if missing:
        raise ParseError(f"no value for point {missing[0]!r}", position)
    return SpaceMap(dom, cod, tuple(table))  # type: ignore[arg-type]


def load_space_file(path: str | Path) -> SpaceFile:
    path = Path(path)
    doc = _loads(path.read_text())
    name, space = space_from_doc(doc)
    maps = []
    for i, entry in enumerate(doc.get("maps") or []):
        where = f"$.maps[{i}]"
        if not isinstance(entry, dict) or "to" not in entry or "assign" not in entry:
            raise ParseError("map entries need 'to' and 'assign'", where)
        cod = resolve_space(entry["to"], path.parent)
        maps.append(map_from_assign(space, cod, entry["assign"], where + ".assign"))
    return SpaceFile(name, space, tuple(maps))


def _label_value(s: Space, x: int) -> str | int:
    return s.labels[x] if s.labels is not None else x


def set_to_doc(s: Space, bits: int) -> list:
    return [_label_value(s, x) for x in iter_points(bits)]


def space_to_doc(s: Space, name: str | None = None) -> dict:
    doc: dict[str, Any] = {}
    if name is not None:
        doc["name"] = name
    doc["points"] = list(s.labels) if s.labels is not None else s.n
    doc["opens"] = [set_to_doc(s, o) for o in s.opens]
    return doc


def _dumps(doc: Any, indent: str = "") -> str:
    # Lists of scalars stay on one line; everything else is expanded.
    if isinstance(doc, dict):
        if not doc:
            return "{}"
        inner = indent + "  "
        items = [f"{inner}{json.dumps(k)}: {_dumps(v, inner)}" for k, v in doc.items()]
        return "{\n" + ",\n".join(items) + "\n" + indent + "}"
    if isinstance(doc, list) and any(isinstance(v, (list, dict)) for v in doc):
        inner = indent + "  "
        return "[\n" + ",\n".join(inner + _dumps(v, inner) for v in doc) + "\n" + indent + "]"
    return json.dumps(doc, ensure_ascii=False, separators=(", ", ": "))


def dump_space(s: Space, name: str | None = None) -> str:
    """Canonical text form: opens in canonical order, members in point order."""
    return _dumps(space_to_doc(s, name)) + "\n"


def witness_to_doc(check_id: str, status: str, w: Witness) -> dict:
    doc: dict[str, Any] = {
        "check": check_id,
        "status": status,
        "spaces": [space_to_doc(s) for s in w.spaces],
        # Sets are point indices of whichever carrier the check puts them on.
        "sets": [list(iter_points(bits)) for bits in w.sets],
    }
    if w.assign is not None:
        doc["map"] = {
            "from": 0,
            "to": 1,
            "assign": {str(_label_value(w.spaces[0], x)): _label_value(w.spaces[1], y)
                       for x, y in enumerate(w.assign)},
        }
    return doc


def dump_witness(check_id: str, status: str, w: Witness) -> str:
    return _dumps(witness_to_doc(check_id, status, w)) + "\n"


def parse_witness(text: str) -> tuple[str, str, Witness]:
    doc = _loads(text)
    if not isinstance(doc, dict):
        raise ParseError("a witness document must be a JSON object")
    for key in ("check", "status", "spaces"):
        if key not in doc:
            raise ParseError(f"missing {key!r}")
    spaces = tuple(space_from_doc(d)[1] for d in doc["spaces"])
    sets = []
    for i, members in enumerate(doc.get("sets", [])):
        if not isinstance(members, list) or not all(isinstance(x, int) for x in members):
            raise ParseError("witness sets are lists of point indices", f"$.sets[{i}]")
        bits = 0
        for x in members:
            bits |= 1 << x
        sets.append(bits)
    assign = None
    if "map" in doc:
        m = doc["map"]
        f = map_from_assign(spaces[m.get("from", 0)], spaces[m.get("to", 1)], m["assign"], "$.map.assign")
        assign = f.assign
    return doc["check"], doc["status"], Witness(spaces, tuple(sets), assign)
