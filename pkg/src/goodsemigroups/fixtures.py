"""Named fixture catalog backed by the packaged data files.

Every catalog entry passes the axiom validator on load; the reconstructed
fixture additionally matches a fresh run of the reconstruction.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .fileio import load_semigroup
from .semigroup import GoodSemigroup, validate

FIXTURE_NAMES = (
    "n3_symmetric",
    "fig3_product",
    "fig4_planecurve",
    "fig4_blowup",
    "transversal_cusps",
    "numerical_2_3",
    "numerical_3_5",
    "numerical_4_7",
    "numerical_3_5_7",
)

_cache: dict[str, GoodSemigroup] = {}


def fixture_path(name: str) -> Path:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}")
    return Path(str(resources.files("goodsemigroups").joinpath("fixtures", f"{name}.json")))


def load_fixture(name: str, check: bool = True) -> GoodSemigroup:
    if name not in _cache:
        S = load_semigroup(fixture_path(name))
        if check:
            report = validate(S)
            if not report.ok:
                raise ValueError(f"fixture {name} failed validation: {report.lines()}")
        _cache[name] = S
    return _cache[name]


def catalog() -> dict[str, GoodSemigroup]:
    return {name: load_fixture(name) for name in FIXTURE_NAMES}
