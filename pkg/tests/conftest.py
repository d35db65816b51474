import numpy as np
import pytest

from grs_hermes.field import tower_for

SMALL_QS = (2, 3, 4, 5, 7, 8, 9)

# filled by test_acceptance, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def gf4():
    return tower_for(2)


@pytest.fixture(scope="session")
def gf9():
    return tower_for(3)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
