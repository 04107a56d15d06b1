import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import CORPUS  # noqa: E402

_CRITERIA: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


@pytest.fixture
def criterion():
    """Record a one-line verdict for the acceptance summary."""

    def record(name, ok, detail=""):
        _CRITERIA.append((name, bool(ok), detail))
        print(f"[{'PASS' if ok else 'FAIL'}] {name} {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
