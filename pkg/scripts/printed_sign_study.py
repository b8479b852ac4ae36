"""Where do the printed forms of the two vertical recurrences disagree with the oracle?

usage: python scripts/printed_sign_study.py [N]
"""

import sys

from stirling_lab.strategies import BrokenIdentityError, s_column_vertical, s_triangular, s_vertical_factorial


def main(N: int = 40) -> None:
    oracle = s_triangular(N + 1)

    by_parity = {0: [0, 0], 1: [0, 0]}  # parity of n -> [agree, disagree]
    for n in range(N + 1):
        for k in range(n + 1):
            printed = s_vertical_factorial(n, k, oracle, "printed")
            by_parity[n % 2][printed != oracle(n + 1, k + 1)] += 1
    print("s(n+1,k+1) with sign (-1)^(l-1):")
    for parity, (agree, disagree) in by_parity.items():
        print(f"  n {'even' if parity == 0 else 'odd '}: agree {agree:4d}  disagree {disagree:4d}")

    wrong, non_integer = [], []
    for n in range(1, N + 1):
        for k in range(1, n + 1):
            try:
                if s_column_vertical(n, k, oracle, "printed") != oracle(n, k):
                    wrong.append((n, k))
            except BrokenIdentityError:
                non_integer.append((n, k))
    total = N * (N + 1) // 2
    print("k s(n,k) relation without the (n-l-1)! factor:")
    print(f"  cells {total}, wrong value {len(wrong)}, non-integer quotient {len(non_integer)}")
    print(f"  first wrong cells {sorted(wrong + non_integer)[:6]}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 40)
