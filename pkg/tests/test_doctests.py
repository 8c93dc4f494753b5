"""Run the docstring examples shipped inside the package modules."""

import doctest

import pytest

from goeritz import amalgam, contract, farey, simplicial, stabilizers, tree, words


@pytest.mark.parametrize(
    "module", [words, stabilizers, amalgam, tree, simplicial, contract, farey]
)
def test_module_doctests(module):
    failures, _ = doctest.testmod(module, verbose=False)
    assert failures == 0
