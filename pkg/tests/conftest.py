"""Shared test plumbing.

The acceptance suite records a one-line verdict per criterion; the
terminal-summary hook reprints them after the run so the verdicts are
visible even with output capture on.
"""

from typing import List

ACCEPTANCE_RESULTS: List[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
