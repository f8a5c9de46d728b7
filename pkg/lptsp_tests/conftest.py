import logging

import numpy as np
import pytest

from lptsp import generators

LOG_LEVELS = {
    0: logging.WARNING,
    1: logging.INFO,
    2: logging.DEBUG,
}


def pytest_configure(config):
    # Note: DEBUG logging traces every Held-Karp layer and local search move,
    # which becomes very verbose very quickly
    logging.basicConfig(
        level=LOG_LEVELS[max(0, min(2, config.option.verbose))])


@pytest.fixture
def rng():
    return np.random.default_rng(2024)


@pytest.fixture
def p3():
    return generators.path(3)


@pytest.fixture
def c4():
    return generators.cycle(4)


@pytest.fixture
def k3():
    return generators.complete(3)


@pytest.fixture
def star13():
    return generators.star(4)
