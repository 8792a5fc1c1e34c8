from __future__ import annotations

import pytest

from reidemeister.matrices import Matrix

_ACCEPTANCE_LINES: list[str] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit-criteria suite")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log():
    """Record one PASS/FAIL line for a criterion; also echoed immediately."""

    def record(criterion: int, ok: bool, detail: str) -> None:
        line = f"CRITERION {criterion} {'PASS' if ok else 'FAIL'}: {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def mat(*rows) -> Matrix:
    return Matrix.from_rows(rows)
