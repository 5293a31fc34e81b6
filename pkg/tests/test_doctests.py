"""Run the docstring examples."""

import doctest

import cubick3.conditions
import cubick3.mukai
import cubick3.pell
import cubick3.standard


def test_doctests():
    attempted = 0
    for mod in (cubick3.conditions, cubick3.mukai, cubick3.pell, cubick3.standard):
        result = doctest.testmod(mod)
        assert result.failed == 0, mod.__name__
        attempted += result.attempted
    assert attempted >= 10
