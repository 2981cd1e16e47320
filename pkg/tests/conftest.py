import random
from pathlib import Path

import pytest

from quivertt.dsl import parse_quiver_file

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "src/quivertt/fixtures"

FIXTURE_NAMES = [
    "kronecker1", "kronecker2", "kronecker3", "kronecker4",
    "beilinson1", "beilinson2", "beilinson3",
    "square", "disconnected", "chain4",
]


def load_fixture(name):
    return parse_quiver_file(FIXTURE_DIR / f"{name}.quiver")


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture(params=FIXTURE_NAMES)
def fixture_spec(request):
    return load_fixture(request.param)


# -- acceptance summary: one pass/fail line per criterion ---------------

_acceptance_results = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" in report.nodeid and report.when == "call":
        _acceptance_results[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name in sorted(_acceptance_results):
        outcome = _acceptance_results[name]
        terminalreporter.write_line(
            f"{name}: {'PASS' if outcome == 'passed' else outcome.upper()}")
