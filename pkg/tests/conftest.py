import pytest

from hjrotation.generate import random_loops
from hjrotation.loop import validate_loop

EXAMPLE_VERTICES = [(1, 0), (1, 3), (-2, -1), (-2, 1), (5, -3)]
SQUARE = [(1, 0), (0, 1), (-1, 0), (0, -1)]

SUITE_SEED = 7
SUITE_COUNT = 1000
SUITE_MAX_D = 12
SUITE_BOUND = 50

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def example_loop():
    return validate_loop(EXAMPLE_VERTICES)


@pytest.fixture(scope="session")
def square_loop():
    return validate_loop(SQUARE)


@pytest.fixture(scope="session")
def suite_loops():
    return list(random_loops(SUITE_SEED, SUITE_COUNT, SUITE_MAX_D, SUITE_BOUND))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
