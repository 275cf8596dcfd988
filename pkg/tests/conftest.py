"""Shared fixtures: a few named molecules and small exhaustive corpora."""

import pytest

from hexaforce import build_hex_system, enumerate_catacondensed


@pytest.fixture
def benzene():
    return build_hex_system([(0, 0)])


@pytest.fixture
def naphthalene():
    return build_hex_system([(0, 0), (1, 0)])


@pytest.fixture
def anthracene():
    return build_hex_system([(0, 0), (1, 0), (2, 0)])


@pytest.fixture
def phenanthrene():
    return build_hex_system([(0, 0), (1, 0), (1, 1)])


@pytest.fixture
def star():
    """Triphenylene: a central hexagon with three non-adjacent neighbours."""
    return build_hex_system([(0, 0), (1, 0), (-1, 1), (0, -1)])


@pytest.fixture
def seven_arm():
    """One branched hexagon with three bent two-cell arms."""
    return build_hex_system(
        [(0, 0), (1, 0), (1, 1), (-1, 1), (-1, 2), (0, -1), (1, -2)])


@pytest.fixture
def linear():
    def make(n):
        return build_hex_system([(i, 0) for i in range(n)])
    return make


@pytest.fixture(scope="session")
def corpus4():
    return [s for n in range(1, 5) for s in enumerate_catacondensed(n)]


@pytest.fixture(scope="session")
def corpus5():
    return [s for n in range(1, 6) for s in enumerate_catacondensed(n)]
