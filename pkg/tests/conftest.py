import random

import pytest

from toricfan.fixtures import fixture_fan


@pytest.fixture
def fan():
    return fixture_fan


@pytest.fixture
def rng():
    return random.Random(20240611)
