import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dunklarr.catalog import catalog  # noqa: E402
from dunklarr.arrangement import enumerate_flats  # noqa: E402


@functools.lru_cache(maxsize=None)
def arrangement(name: str):
    family, *params = name.split(":")
    return catalog(family, *map(int, params))


@functools.lru_cache(maxsize=None)
def poset(name: str):
    return enumerate_flats(arrangement(name))


@pytest.fixture
def braid4():
    return poset("braid:4")


@pytest.fixture
def b3():
    return poset("full_monomial_B:3")


@pytest.fixture
def generic53():
    return poset("generic:5:3")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
