import random

import pytest

from gfperm.field import build_field, extend_quadratic


@pytest.fixture(scope="session")
def gf2():
    return build_field(2, 1)


@pytest.fixture(scope="session")
def gf4():
    return build_field(2, 2)


@pytest.fixture(scope="session")
def gf8():
    return build_field(2, 3)


@pytest.fixture(scope="session")
def gf9():
    return build_field(3, 2)


@pytest.fixture(scope="session")
def gf16():
    return build_field(2, 4)


@pytest.fixture(scope="session")
def gf32():
    return build_field(2, 5)


@pytest.fixture(scope="session")
def gf64_tower(gf8):
    return extend_quadratic(gf8)


@pytest.fixture()
def rng():
    return random.Random(0xC0FFEE)
