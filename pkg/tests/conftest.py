from fractions import Fraction

import pytest

from pyquartet.multipoly import DEFAULT_TABLE
from pyquartet.ratfield import rf_var
from pyquartet.scene import build_scene

# the tuple used throughout for numeric examples
SAMPLE_TUPLE = {"m": Fraction(1, 3), "n": Fraction(1, 4), "M": Fraction(2, 3), "N": Fraction(1, 5)}


@pytest.fixture(scope="session")
def scene():
    """The symbolic quartet scene over Q(m, n, M, N); built once, it is the expensive part."""
    return build_scene()


@pytest.fixture(scope="session")
def sample_scene():
    return build_scene(list(SAMPLE_TUPLE.values()))


@pytest.fixture
def table():
    return DEFAULT_TABLE


@pytest.fixture
def m(table):
    return rf_var(table, "m")


@pytest.fixture
def n(table):
    return rf_var(table, "n")
