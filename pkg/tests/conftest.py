"""Shared fixtures: sweep reports and the acceptance-criterion recorder."""

import pytest

from braidinv.hecke import enumerate_s4_check_words, enumerate_s5_check_words
from braidinv.verify import run_equality_sweep

_criterion_lines = []


@pytest.fixture(scope="session")
def record_criterion():
    """Print and collect one pass/fail line per acceptance criterion."""
    def record(number: int, ok: bool, detail: str) -> None:
        line = f"[{'OK' if ok else 'FAIL'}] criterion {number:>2}: {detail}"
        _criterion_lines.append(line)
        print(line)
        assert ok, line
    return record


@pytest.fixture(scope="session")
def s4_report():
    return run_equality_sweep(enumerate_s4_check_words(), audit_fraction=0.01)


@pytest.fixture(scope="session")
def s5_report():
    return run_equality_sweep(enumerate_s5_check_words(), audit_fraction=0.01)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_criterion_lines):
            terminalreporter.write_line(line)
