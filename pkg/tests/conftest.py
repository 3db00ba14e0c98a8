from pathlib import Path

import pytest

from emaext.emalg import parse_document

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"


@pytest.fixture
def doc():
    return parse_document


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
