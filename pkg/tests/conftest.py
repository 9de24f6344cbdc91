import pytest

from corpus import group_and_table


@pytest.fixture(scope="session")
def s3():
    return group_and_table("S3")


@pytest.fixture(scope="session")
def z3():
    return group_and_table("Z3")


@pytest.fixture(scope="session")
def q8():
    return group_and_table("Q8")
