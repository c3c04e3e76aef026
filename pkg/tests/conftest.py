import pytest
from hypothesis import settings

from freemoments import amalgam

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def x():
    return amalgam.x_element()


@pytest.fixture(scope="session")
def y():
    return amalgam.y_element()


@pytest.fixture(scope="session")
def z():
    return amalgam.generating_element()
