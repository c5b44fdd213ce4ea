import pytest

from linprod.poly import Ring


@pytest.fixture
def R2():
    return Ring(("x", "y"))


@pytest.fixture
def R3():
    return Ring(("x", "y", "z"))
