from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import strategies as st

from stirling_lab.strategies import s_triangular

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(bool)


def cycle_count(perm) -> int:
    seen, cycles = set(), 0
    for start in range(len(perm)):
        if start in seen:
            continue
        cycles += 1
        i = start
        while i not in seen:
            seen.add(i)
            i = perm[i]
    return cycles


def brute_stirling(n_max: int) -> dict[tuple[int, int], int]:
    """(-1)**(n-k) * #{permutations of n with k cycles}, counted directly."""
    out = {(0, 0): 1}
    for n in range(1, n_max + 1):
        counts = [0] * (n + 1)
        for p in permutations(range(n)):
            counts[cycle_count(p)] += 1
        for k in range(n + 1):
            out[n, k] = (-1) ** (n - k) * counts[k]
    return out


@pytest.fixture(scope="session")
def oracle():
    return s_triangular(90)


@pytest.fixture(scope="session")
def brute():
    return brute_stirling(7)


def F(p, q=1):
    return Fraction(p, q)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(test_acceptance.RESULTS, key=lambda s: int(s.split()[0])):
        ok, detail = test_acceptance.RESULTS[name]
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {name}"
        if not ok:
            line += f": {detail}"
        terminalreporter.write_line(line)
