import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from periodic_roster import load_fixture  # noqa: E402

_criteria: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture(scope="session")
def E1():
    return load_fixture("E1")


@pytest.fixture(scope="session")
def E2():
    return load_fixture("E2")


@pytest.fixture(scope="session")
def P1():
    return load_fixture("P1")


@pytest.fixture(scope="session")
def night_shift():
    return load_fixture("night_shift")


@pytest.fixture
def record_criterion():
    """Register one acceptance line: ``record_criterion(number, title, passed, detail)``."""
    def record(number: int, title: str, passed: bool, detail: str = "") -> None:
        _criteria[number] = (title, passed, detail)
    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_criteria):
        title, ok, detail = _criteria[k]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {title}  {detail}".rstrip())
