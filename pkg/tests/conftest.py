import pytest

from obrsk.fixture import FIXTURE_BITABLEAU, FIXTURE_PAIR, FIXTURE_STEPS


@pytest.fixture
def worked_pair():
    return FIXTURE_PAIR


@pytest.fixture
def worked_bitableau():
    return FIXTURE_BITABLEAU


@pytest.fixture
def worked_steps():
    return FIXTURE_STEPS
