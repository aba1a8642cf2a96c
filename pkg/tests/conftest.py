from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

_criteria: list[tuple[str, bool]] = []


@pytest.fixture
def record_criterion():
    """Register the pass/fail line of one acceptance criterion."""

    def record(label: str, ok: bool) -> None:
        _criteria.append((label, ok))
        print(f"[{'PASS' if ok else 'FAIL'}] {label}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in _criteria:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {label}")


# Unreduced Burau representation of the braid group B4 at a fixed rational t.
# Independent of the rewriting engine; the chain a - b - c maps to sigma_1..3.

BURAU_T = Fraction(3, 7)


def _matmul(x, y):
    n = len(x)
    return [[sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _burau_generator(i: int, sign: int, n: int = 4, t: Fraction = BURAU_T):
    m = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    if sign > 0:
        blk = [[1 - t, t], [Fraction(1), Fraction(0)]]
    else:
        blk = [[Fraction(0), Fraction(1)], [1 / t, 1 - 1 / t]]
    for r in range(2):
        for c in range(2):
            m[i + r][i + c] = blk[r][c]
    return m


def burau(word, strands=None):
    strands = strands or {"a": 0, "b": 1, "c": 2}
    m = [[Fraction(int(r == c)) for c in range(4)] for r in range(4)]
    for letter in word:
        m = _matmul(m, _burau_generator(strands[letter.label], letter.sign))
    return m
