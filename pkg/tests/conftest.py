import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_ACCEPTANCE: dict[int, tuple[bool, str, str]] = {}


@pytest.fixture
def criterion():
    """Record one acceptance criterion and assert it."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE[number] = (bool(ok), title, detail)
        assert ok, f"criterion {number} ({title}) failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, title, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {title}: {detail}")
