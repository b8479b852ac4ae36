"""Best-of-R build time for every strategy over a sweep of table sizes.

usage: python scripts/bench_sweep.py [max_n ...]
"""

import sys
import time

from stirling_lab.cli import BENCH_DEFAULT
from stirling_lab.strategies import build_table, clear_caches, s_triangular

REPETITIONS = 3


def main(sizes: list[int]) -> None:
    print("strategy," + ",".join(f"n={n}" for n in sizes))
    oracles = {n: s_triangular(n + 1) for n in sizes}
    for strategy in BENCH_DEFAULT:
        cells = []
        for n in sizes:
            best = float("inf")
            for _ in range(REPETITIONS):
                clear_caches()
                t0 = time.perf_counter()
                table = build_table(strategy, n, oracles[n])
                best = min(best, time.perf_counter() - t0)
            assert table.entries == oracles[n].entries[: len(table.entries)], strategy
            cells.append(f"{best:.4f}")
        print(strategy + "," + ",".join(cells), flush=True)


if __name__ == "__main__":
    main([int(a) for a in sys.argv[1:]] or [10, 20, 40])
