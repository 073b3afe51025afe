from __future__ import annotations

from fractions import Fraction

import pytest

from effmat import HCycle, ReciprocalMatrix

# criterion number -> (title, passed); filled in by test_acceptance.py
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def F(x) -> Fraction:
    return Fraction(x)


def mat(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def cyc(label: str) -> HCycle:
    return HCycle.parse(label)


@pytest.fixture
def bound_matrix() -> ReciprocalMatrix:
    from effmat.known import BOUND_MATRIX

    return BOUND_MATRIX


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title}")
