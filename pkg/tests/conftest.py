import pytest

from hofsum import generate


@pytest.fixture(scope="session")
def classic_5000():
    return generate((1, 2), 5000)


@pytest.fixture(scope="session")
def classic_30000():
    return generate((1, 2), 30000)
