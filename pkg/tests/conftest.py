import pytest
from hypothesis import HealthCheck, settings

import support

settings.register_profile(
    "geninv",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("geninv")


@pytest.fixture
def ex1():
    return support.EX1


@pytest.fixture
def ex1_pinv():
    return support.EX1_PINV


@pytest.fixture
def ex3():
    return support.EX3


@pytest.fixture
def ex3_pinv():
    return support.EX3_PINV
