import pytest

from invsg import pbij


@pytest.fixture(scope="session")
def I2():
    return pbij.symmetric_inverse_monoid(2)


@pytest.fixture(scope="session")
def I3():
    return pbij.symmetric_inverse_monoid(3)


@pytest.fixture(scope="session")
def i2_subsemigroups():
    return list(pbij.enumerate_inverse_subsemigroups(2, 7))
