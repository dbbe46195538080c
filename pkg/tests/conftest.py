import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import labelkit as lk


@pytest.fixture(scope="session")
def k3():
    return lk.complete_graph(3)


@pytest.fixture(scope="session")
def k4():
    return lk.complete_graph(4)


@pytest.fixture(scope="session")
def p3():
    return lk.path_graph(3)


@pytest.fixture(scope="session")
def p4():
    return lk.path_graph(4)


@pytest.fixture(scope="session")
def c4():
    return lk.cycle_graph(4)


@pytest.fixture(scope="session")
def c5():
    return lk.cycle_graph(5)


@pytest.fixture(scope="session")
def c6():
    return lk.cycle_graph(6)


@pytest.fixture(scope="session")
def petersen():
    return lk.petersen_graph()
