import pytest

from seqfam.family import build_family
from seqfam.fields import build_extension, build_field


@pytest.fixture(scope="session")
def gf5():
    return build_field(5, 1)


@pytest.fixture(scope="session")
def gf16():
    return build_field(2, 4)


@pytest.fixture(scope="session")
def gf4():
    return build_field(2, 2)


@pytest.fixture(scope="session")
def gf13():
    return build_field(13, 1)


@pytest.fixture(scope="session")
def gf25(gf5):
    return build_extension(gf5, 2)


@pytest.fixture(scope="session")
def gf256(gf16):
    return build_extension(gf16, 2)


@pytest.fixture(scope="session")
def gf64_over4(gf4):
    return build_extension(gf4, 3)


@pytest.fixture(scope="session")
def gf169(gf13):
    return build_extension(gf13, 2)


@pytest.fixture(scope="session")
def fam16_m5(gf256):
    return build_family(gf256, 5)
