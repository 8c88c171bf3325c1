import pytest

from testing.fixtures import example1, example2, example_schema


@pytest.fixture
def schema():
    return example_schema()


@pytest.fixture
def ex1():
    return example1()


@pytest.fixture
def ex2():
    return example2()
