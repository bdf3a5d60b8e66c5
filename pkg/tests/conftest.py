"""Shared pytest configuration.

Collects the one-line verdicts emitted by the acceptance suite and repeats
them in the terminal summary, where they are visible even though pytest
captures stdout during the tests themselves.
"""

from __future__ import annotations

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
