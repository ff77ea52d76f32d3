import sys

import pytest

from fourpage.diagram import parse_pd
from fourpage.fixtures import load_fixtures

TREFOIL = "X 1 4 2 5; X 3 6 4 1; X 5 2 6 3"
HOPF = "X 4 2 3 1; X 2 4 1 3"
FIGURE_EIGHT = "X 4 2 5 1; X 8 6 1 5; X 6 3 7 4; X 2 7 3 8"
KINK = "X 1 2 2 1"
# Hopf projection with the second crossing re-rotated: component {1, 2}
# passes over at both crossings (a two-crossing unlink diagram).
OVERLAY = "X 3 2 4 1; X 3 1 4 2"

FIXTURES = load_fixtures()
SMALL = [f for f in FIXTURES if f.diagram.crossing_number <= 8]
ALTERNATING = [f for f in SMALL if f.known.get("alternating")]
NONALTERNATING_8 = [f for f in FIXTURES if f.name in ("8_19", "8_20", "8_21")]


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL, name="3_1")


@pytest.fixture
def hopf():
    return parse_pd(HOPF, name="L2a1")


@pytest.fixture
def figure_eight():
    return parse_pd(FIGURE_EIGHT, name="4_1")


def fixture_ids(fixtures):
    return [f.name for f in fixtures]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
