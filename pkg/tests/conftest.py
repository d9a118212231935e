from fractions import Fraction
from math import factorial

import pytest

from hookstats.partitions import enumerate_partitions, syt_count_oracle


def naive_hooks(parts):
    """Hook lengths by counting cells to the right and below, row-major."""
    cells = {(i, j) for i, p in enumerate(parts) for j in range(p)}
    out = []
    for i, p in enumerate(parts):
        for j in range(p):
            arm = sum(1 for c in range(j + 1, p) if (i, c) in cells)
            leg = sum(1 for r in range(i + 1, len(parts)) if (r, j) in cells)
            out.append(arm + leg + 1)
    return out


def brute_phi(stat_of_squares, n):
    """(1/n!) sum f^2 F(h^2) with f from corner removal and hooks from cell counting."""
    total = 0
    for lam in enumerate_partitions(n):
        squares = [h * h for h in naive_hooks(lam.parts)]
        total += syt_count_oracle(lam) ** 2 * stat_of_squares(squares)
    return Fraction(total, factorial(n))


@pytest.fixture
def brute():
    return brute_phi


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
