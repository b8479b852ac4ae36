"""Classify each diagonal relation cell by cell: vacuous (RHS reduces to s(n,k) itself) or constructive.

usage: python scripts/vacuity_report.py [N]
"""

import sys
from collections import Counter

from stirling_lab.identities import coefficient_vector

VARIANTS = ("D10", "D10K", "D11", "U20", "CASE18", "CASE19")


def classify(vec: dict[int, int]) -> str:
    self_coeff = vec.get(0, 0)
    others = any(c for l, c in vec.items() if l)
    if self_coeff == 1 and not others:
        return "vacuous"
    if self_coeff == 0 and others:
        return "constructive"
    if not vec:
        return "empty"
    return f"mixed(self={self_coeff})"


def region(n: int, k: int) -> str:
    if n == k:
        return "n=k"
    return "k<n<2k" if 2 * k > n else "n>=2k"


def main(N: int = 30) -> None:
    for variant in VARIANTS:
        tally = Counter()
        for n in range(1, N + 1):
            for k in range(1, n + 1):
                tally[region(n, k), classify(coefficient_vector(n, k, variant))] += 1
        print(variant)
        for (reg, kind), count in sorted(tally.items()):
            print(f"  {reg:<8} {kind:<16} {count}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 30)
