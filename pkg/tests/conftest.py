import pytest

import helpers


@pytest.fixture
def choice_late():
    return helpers.choice_late()


@pytest.fixture
def choice_early():
    return helpers.choice_early()


@pytest.fixture
def dup_branch():
    return helpers.dup_branch()


@pytest.fixture
def twin_fork():
    return helpers.twin_fork()


@pytest.fixture
def skew_pair():
    return helpers.skew_pair()
