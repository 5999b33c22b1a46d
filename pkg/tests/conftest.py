"""
Shared fixtures: the fixture algebras and their cached posets.

Algebras are loaded once per session so the posets cached on them are shared
between test modules.
"""

import os

import pytest

from algebra.parser import load_algebra
from reps.homs import configure_search
from tilting.completion import cached_hasse

FIXTURES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES_DIR, f"{name}.qa")


@pytest.fixture(scope="session", autouse=True)
def seeded_search():
    configure_search(20240601, 6)


@pytest.fixture(scope="session")
def algebras():
    names = ("K", "K2", "B1a", "A1a", "B1b", "A1b", "B2", "A2", "A3")
    return {name: load_algebra(fixture_path(name)) for name in names}


@pytest.fixture(scope="session")
def B1a(algebras):
    return algebras["B1a"]


@pytest.fixture(scope="session")
def A1a(algebras):
    return algebras["A1a"]


@pytest.fixture(scope="session")
def B1b(algebras):
    return algebras["B1b"]


@pytest.fixture(scope="session")
def A1b(algebras):
    return algebras["A1b"]


@pytest.fixture(scope="session")
def K2(algebras):
    return algebras["K2"]


@pytest.fixture(scope="session")
def poset_B1b(B1b):
    return cached_hasse(B1b)


@pytest.fixture(scope="session")
def poset_A1b(A1b):
    return cached_hasse(A1b)


@pytest.fixture(scope="session")
def poset_B2(algebras):
    return cached_hasse(algebras["B2"])


@pytest.fixture(scope="session")
def poset_A2(algebras):
    return cached_hasse(algebras["A2"])
