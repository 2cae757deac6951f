import pytest

from casys import casestudies


@pytest.fixture(scope="session")
def reactor_study():
    return casestudies.reactor()


@pytest.fixture(scope="session")
def candy_study():
    return casestudies.candy()
