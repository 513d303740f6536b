from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from goodsemigroups import apery_set, load_fixture, principal_ideal


@pytest.fixture(scope="session")
def fig3():
    return load_fixture("fig3_product")


@pytest.fixture(scope="session")
def fig4():
    return load_fixture("fig4_planecurve")


@pytest.fixture(scope="session")
def n3():
    return load_fixture("n3_symmetric")


@pytest.fixture(scope="session")
def cusps():
    return load_fixture("transversal_cusps")


@pytest.fixture(scope="session")
def fig4_blowup_fixture():
    return load_fixture("fig4_blowup")


def apery_pair(S, w):
    """(ideal, complement) of the Apery set at w."""
    return principal_ideal(S, w), apery_set(S, w)


def brute_members(gens, bound):
    """Independent numerical-semigroup membership sieve (test oracle)."""
    member = [False] * (bound + 1)
    member[0] = True
    for n in range(1, bound + 1):
        member[n] = any(n >= g and member[n - g] for g in gens)
    return member
