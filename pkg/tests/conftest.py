import pathlib
import sys

import pytest

from ukbw import Instance

sys.path.insert(0, str(pathlib.Path(__file__).parent))

DATA = pathlib.Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def inst_a():
    return Instance.from_lists([3, 5], [1, 2], [2, 3], 7)


@pytest.fixture
def inst_b():
    return Instance.from_lists([1, 1], [1, 1], [3, 3], 4)


@pytest.fixture
def inst_c():
    return Instance.from_lists([1], [2], [3], 1)


@pytest.fixture
def inst_d():
    return Instance.from_lists([1], [1], [1], 5)
