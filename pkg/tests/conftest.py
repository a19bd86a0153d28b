import sys
from pathlib import Path

import pytest

from jawacal.schedule import Court, load_schedule

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def surakarta():
    return load_schedule(Court.SURAKARTA)


@pytest.fixture(scope="session")
def yogyakarta():
    return load_schedule(Court.YOGYAKARTA)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for result in sorted(results, key=lambda r: r[0]):
        terminalreporter.write_line(module.format_result(*result))
