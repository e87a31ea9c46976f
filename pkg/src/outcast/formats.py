"""JSON files for choice functions and hyper-orders.

A choice-function file is ``{"universe": [...], "choice": [...]}`` and an
order file is ``{"universe": [...], "ranks": [...]}``. Integers are plain
bitmasks; position in ``universe`` fixes the bit.
"""

from __future__ import annotations

import json
from pathlib import Path

from outcast.choice import ChoiceFunction, validate
from outcast.errors import OutcastError
from outcast.order import HyperOrder, validate_order
from outcast.subsets import Universe


class FormatError(OutcastError):
    pass


def _parse(text: str, field: str) -> tuple[Universe, list[int]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != {"universe", field}:
        raise FormatError(f'expected an object with exactly the keys "universe" and "{field}"')
    names, values = doc["universe"], doc[field]
    if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
        raise FormatError('"universe" must be a list of strings')
    if not isinstance(values, list):
        raise FormatError(f'"{field}" must be a list of integers')
    for i, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, int):
            raise FormatError(f"{field}[{i}] = {v!r} is not an integer")
    return Universe(tuple(names)), values


def _dump(universe: Universe, field: str, values) -> str:
    return json.dumps({"universe": list(universe.names), field: list(values)}) + "\n"


def loads_choice(text: str) -> ChoiceFunction:
    universe, values = _parse(text, "choice")
    return validate(universe, values)


def dumps_choice(f: ChoiceFunction) -> str:
    return _dump(f.universe, "choice", f.table)


def loads_order(text: str) -> HyperOrder:
    universe, values = _parse(text, "ranks")
    return validate_order(universe, values)


def dumps_order(order: HyperOrder) -> str:
    return _dump(order.universe, "ranks", order.ranks)


def read_choice(path: str | Path) -> ChoiceFunction:
    return loads_choice(Path(path).read_text())


def read_order(path: str | Path) -> HyperOrder:
    return loads_order(Path(path).read_text())


def write_choice(path: str | Path, f: ChoiceFunction) -> None:
    Path(path).write_text(dumps_choice(f))


def write_order(path: str | Path, order: HyperOrder) -> None:
    Path(path).write_text(dumps_order(order))
