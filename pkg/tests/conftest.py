from __future__ import annotations

import pytest

from modelorbit import build_root_system, g2_model_grading, grading_from_diagram

# filled by test_acceptance.py, printed at the end of the session
ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, text: str, ok: bool) -> None:
    ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def g2():
    return build_root_system("G", 2)


@pytest.fixture(scope="session")
def a1():
    return build_root_system("A", 1)


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A", 2)


@pytest.fixture(scope="session")
def model():
    return g2_model_grading()


@pytest.fixture(scope="session")
def zero_grading(g2):
    return grading_from_diagram(g2, (0, 0))


@pytest.fixture(scope="session")
def principal(g2):
    return grading_from_diagram(g2, (2, 2))
