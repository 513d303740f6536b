"""Reading and writing the semigroup file format.

Three JSON shapes are accepted:

    {"dim": d, "conductor": [..], "small_elements": [[..], ..]}
    {"dim": 1, "generators": [..]}
    {"product": ["left.json", "right.json"]}

Product entries are paths resolved relative to the referencing file.
Emission is canonical (sorted elements, fixed key order), so parsing an
emitted file reproduces the semigroup exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .semigroup import GoodSemigroup, NumericalSemigroup, direct_product


class FormatError(ValueError):
    pass


def semigroup_from_data(data, base: Path | None = None) -> GoodSemigroup:
    if not isinstance(data, dict):
        raise FormatError("top level must be an object")
    if "product" in data:
        parts = data["product"]
        if not isinstance(parts, list) or len(parts) != 2:
            raise FormatError("product must list exactly two files")
        left = load_semigroup(_resolve(parts[0], base))
        right = load_semigroup(_resolve(parts[1], base))
        return direct_product(left, right)
    if "generators" in data:
        if data.get("dim", 1) != 1:
            raise FormatError("generators are only allowed with dim 1")
        gens = _int_list(data["generators"], "generators")
        return NumericalSemigroup(gens).as_good()
    try:
        dim = int(data["dim"])
        conductor = _int_list(data["conductor"], "conductor")
        small = [tuple(_int_list(p, "small element")) for p in data["small_elements"]]
    except KeyError as exc:
        raise FormatError(f"missing key {exc.args[0]!r}") from exc
    return GoodSemigroup(dim, tuple(conductor), small)


def _int_list(xs, what) -> list[int]:
    if not isinstance(xs, list) or not all(isinstance(x, int) for x in xs):
        raise FormatError(f"{what} must be a list of integers")
    return [int(x) for x in xs]


def _resolve(name, base: Path | None) -> Path:
    p = Path(name)
    if not p.is_absolute() and base is not None:
        p = base / p
    return p


def load_semigroup(path) -> GoodSemigroup:
    path = Path(path)
    with open(path) as fh:
        data = json.load(fh)
    return semigroup_from_data(data, base=path.parent)


def emit_semigroup(S: GoodSemigroup) -> str:
    data = {
        "dim": S.dim,
        "conductor": list(S.conductor),
        "small_elements": [list(p) for p in sorted(S.small_elements)],
    }
    return json.dumps(data, indent=1, sort_keys=False) + "\n"


def save_semigroup(S: GoodSemigroup, path) -> None:
    Path(path).write_text(emit_semigroup(S))
