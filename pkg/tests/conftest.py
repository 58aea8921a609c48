import math
from pathlib import Path

import pytest

from rotcolor.diagram import parse_pd

DATA = Path(__file__).parent / "data"

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT_PD = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"

# coprime 2 <= p < q <= 5, plus (2, 7)
TORUS_CORPUS = [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (2, 7)]


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL_PD)


@pytest.fixture
def figure_eight():
    return parse_pd(FIGURE_EIGHT_PD)


def close_angle(a, b, tol=1e-9):
    return abs(math.remainder(a - b, 2 * math.pi)) <= tol


_acceptance_results = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for marker in report.keywords:
        if marker == "acceptance":
            label = report.user_properties and dict(report.user_properties).get("criterion")
            _acceptance_results.append((label or report.nodeid, report.outcome))


@pytest.fixture
def criterion(record_property):
    def _set(label):
        record_property("criterion", label)

    return _set


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in _acceptance_results:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")
