"""Run the usage examples embedded in the library docstrings."""

import doctest

import pytest

from pottstrip import (
    bruteforce,
    characters,
    connectivity,
    lattice,
    polynomial,
    transfer,
)

MODULES = [bruteforce, characters, connectivity, lattice, polynomial, transfer]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_module_doctests(module):
    result = doctest.testmod(module, verbose=False)
    assert result.attempted > 0
    assert result.failed == 0
