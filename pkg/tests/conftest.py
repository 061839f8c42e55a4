"""Shared fixtures for mtorus tests."""

from collections.abc import Callable
from pathlib import Path

import pytest

from mtorus.core.models import MarkedMap
from mtorus.graphs.parser import parse_marked_map
from mtorus.tg.parser import parse_tg
from mtorus.tg.realize import realize
from mtorus.triangulation.models import Triangulation3

FIXTURES_DIR = Path(__file__).parent / "fixtures"


def read_fixture(name: str) -> str:
    return (FIXTURES_DIR / name).read_text(encoding="utf-8")


@pytest.fixture()
def load_fixture() -> Callable[[str], str]:
    """Return a callable that reads a fixture file by name."""
    return read_fixture


@pytest.fixture()
def load_map() -> Callable[[str], MarkedMap]:
    """Return a callable that parses a marked-map fixture by name."""

    def _load(name: str) -> MarkedMap:
        return parse_marked_map(read_fixture(name), name)

    return _load


@pytest.fixture()
def fig8() -> MarkedMap:
    return parse_marked_map(read_fixture("fig8.map"), "fig8.map")


@pytest.fixture()
def example1() -> MarkedMap:
    return parse_marked_map(read_fixture("example1.map"), "example1.map")


@pytest.fixture()
def m004() -> Triangulation3:
    """The two-tetrahedron figure-eight knot complement from its T/G listing."""
    return realize(parse_tg(read_fixture("m004.tg"), "m004.tg"))


@pytest.fixture()
def theta() -> MarkedMap:
    """A two-vertex map whose last fold contracts an arc."""
    return parse_marked_map(read_fixture("theta.map"), "theta.map")
