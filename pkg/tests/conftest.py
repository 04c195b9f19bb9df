"""Shared fixtures.  Curves and tables are session scoped: they are immutable
and the F27 objects are the expensive ones."""

import pytest

from avcbounds.curve import preset_curve
from avcbounds.mu import classify_pairs
from avcbounds.rho import BasisTriple, rho_table_algebraic


@pytest.fixture(scope="session")
def f8():
    return preset_curve("f8")


@pytest.fixture(scope="session")
def f27():
    return preset_curve("f27")


@pytest.fixture(scope="session")
def t8(f8):
    return rho_table_algebraic(f8)


@pytest.fixture(scope="session")
def t27(f27):
    return rho_table_algebraic(f27)


@pytest.fixture(scope="session")
def triple8(f8):
    return BasisTriple.from_curve(f8)


@pytest.fixture(scope="session")
def pairs8(t8):
    return classify_pairs(t8)
