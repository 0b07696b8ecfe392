"""Shared fixtures for the qchev test suite."""

import pytest

from qchev.io import parse_descriptor
from qchev.roots import CartanType, build_root_system


@pytest.fixture(scope='session')
def testdir(tmp_path_factory):
    """Test path that will be used to write all files."""
    return tmp_path_factory.getbasetemp()


@pytest.fixture
def root_system():
    """Factory: ``root_system('B', 3)``."""

    def _build(family, rank):
        return build_root_system(CartanType(family, rank))

    return _build


@pytest.fixture
def parabolic():
    """Factory: ``parabolic('A3:2')`` gives the ParabolicChoice of Gr(2, 4)."""

    def _build(text):
        return parse_descriptor(text).parabolic()

    return _build


@pytest.fixture
def cp1(parabolic):
    return parabolic('A1:1')


@pytest.fixture
def gr24(parabolic):
    return parabolic('A3:2')


@pytest.fixture
def quadric3(parabolic):
    return parabolic('B2:1')
