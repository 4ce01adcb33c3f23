"""Shared fixtures plus the acceptance-line reporter.

Acceptance tests append one summary line per criterion via the
``acceptance`` fixture; the hook below replays them after the test
session so they survive pytest's output capture.
"""

import numpy as np
import pytest

from modescent import make_figure1_problem, make_random_quadratic_family

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


@pytest.fixture
def acceptance():
    """Recorder for ACCEPTANCE lines; also prints so -s shows them live."""

    def record(number: int, passed: bool, details: str) -> None:
        line = "ACCEPTANCE %d: %s - %s" % (
            number,
            "PASS" if passed else "FAIL",
            details,
        )
        ACCEPTANCE_LINES.append(line)
        print(line)

    return record


@pytest.fixture
def fig1():
    return make_figure1_problem()


@pytest.fixture
def quad_family():
    return make_random_quadratic_family(3, 4, seed=7)


@pytest.fixture
def rng():
    return np.random.default_rng(20260813)
