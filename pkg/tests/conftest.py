"""Shared fixtures and the acceptance-criteria summary hook."""

from __future__ import annotations

import pytest

from tdcode import DupSystem

CRITERION_RESULTS: list[tuple[int, str, bool, float, str]] = []


def record_criterion(num: int, name: str, passed: bool, seconds: float,
                     detail: str = "") -> None:
    CRITERION_RESULTS.append((num, name, passed, seconds, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not CRITERION_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, name, passed, seconds, detail in sorted(CRITERION_RESULTS):
        verdict = "PASS" if passed else "FAIL"
        extra = f"  [{detail}]" if detail else ""
        terminalreporter.write_line(
            f"{verdict}  criterion {num:02d}  {name}  ({seconds:.2f}s){extra}"
        )


@pytest.fixture(scope="session")
def s32() -> DupSystem:
    return DupSystem(q=3, k=2)


@pytest.fixture(scope="session")
def s33() -> DupSystem:
    return DupSystem(q=3, k=3)


@pytest.fixture(scope="session")
def s42() -> DupSystem:
    return DupSystem(q=4, k=2)


@pytest.fixture(scope="session")
def s43() -> DupSystem:
    return DupSystem(q=4, k=3)
