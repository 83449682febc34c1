import os
import random
import sys

import pytest
from hypothesis import settings

from burnside_bicat.generators import contractible, cyclic, klein, symmetric
from burnside_bicat.groupoids import discrete_groupoid, empty_groupoid, terminal_groupoid

settings.register_profile("default", deadline=None, max_examples=40)
settings.load_profile("default")

DATA = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def rng():
    return random.Random(20261019)


@pytest.fixture(scope="session")
def C2():
    return cyclic(2)


@pytest.fixture(scope="session")
def C3():
    return cyclic(3)


@pytest.fixture(scope="session")
def S3():
    return symmetric(3)


@pytest.fixture(scope="session")
def V4():
    return klein()


@pytest.fixture(scope="session")
def one():
    return terminal_groupoid()


@pytest.fixture(scope="session")
def E():
    return empty_groupoid()


@pytest.fixture(scope="session")
def D2():
    return discrete_groupoid(2)


@pytest.fixture(scope="session")
def I():
    return contractible(2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.VERDICTS, key=lambda t: int(t.split()[1])):
            terminalreporter.write_line(line)
