import pytest

from numbio import enumerate_autobiographical, find_praising_pairs


@pytest.fixture(scope="session")
def catalog():
    return enumerate_autobiographical()


@pytest.fixture(scope="session")
def all_pairs():
    return find_praising_pairs()
