"""Run every module's docstring examples."""

import doctest
import importlib

import pytest

MODULES = [
    "permpaths.permutations",
    "permpaths.paths",
    "permpaths.series",
    "permpaths.bijections",
    "permpaths.formulas",
    "permpaths.oracle",
]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    module = importlib.import_module(name)
    result = doctest.testmod(module)
    assert result.attempted > 0
    assert result.failed == 0
