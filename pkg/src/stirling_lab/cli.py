"""Command-line front end: ``stirling-lab {table,bell,verify,bench}``.

Exit codes: 0 success, 2 bad usage or malformed input, 3 corrupt cache,
4 disagreement between routes, 5 unexpected identity failure.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .bell import bell_partitions, bell_series
from .exact_core import format_rational, parse_rational
from .identities import IDENTITIES, SuiteConfig, catalogue_problems, run_suite
from .strategies import build_table, clear_caches, s_triangular
from .table import STRATEGIES, SignedStirlingTable

CACHE_ENV = "STIRLING_LAB_CACHE"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CACHE = 3
EXIT_DISAGREE = 4
EXIT_IDENTITY = 5

BENCH_DEFAULT = tuple(s for s in STRATEGIES if s != "vertical_factorial_printed")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class CliConfig:
    command: str
    max_n: int = 10
    strategy: str = "triangular"
    format: str = "csv"
    identities: tuple[str, ...] = IDENTITIES
    strategies: tuple[str, ...] = BENCH_DEFAULT
    cache_path: Path | None = None
    bench_repetitions: int = 3
    bell_n: int = 0
    bell_k: int = 0
    bell_args: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.max_n < 1:
            raise CliError(f"--max-n must be >= 1, got {self.max_n}", EXIT_USAGE)
        if self.bench_repetitions < 1:
            raise CliError("--repetitions must be >= 1", EXIT_USAGE)
        if self.format not in ("csv", "json"):
            raise CliError(f"unknown format {self.format!r}", EXIT_USAGE)
        if self.strategy not in STRATEGIES:
            raise CliError(f"unknown strategy {self.strategy!r}", EXIT_USAGE)
        for st in self.strategies:
            if st not in STRATEGIES:
                raise CliError(f"unknown strategy {st!r}", EXIT_USAGE)
        for id in self.identities:
            if id not in IDENTITIES:
                raise CliError(f"unknown identity {id!r}", EXIT_USAGE)


def _split(text: str) -> tuple[str, ...]:
    return tuple(p.strip() for p in text.split(",") if p.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stirling-lab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit a table of s(n,k)")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--strategy", default="triangular", choices=STRATEGIES)
    p.add_argument("--format", default="csv", choices=("csv", "json"))
    p.add_argument("--cache", dest="cache_path", type=Path, default=None)

    p = sub.add_parser("bell", help="evaluate a partial Bell polynomial B(n,k)(x_1, ...)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("args", nargs="*", help="x_1 x_2 ... as p or p/q")

    p = sub.add_parser("verify", help="run the identity audit and print a JSON report")
    p.add_argument("--max-n", type=int, default=40)
    p.add_argument("--identities", type=_split, default=IDENTITIES)

    p = sub.add_parser("bench", help="time strategies building the triangle")
    p.add_argument("--max-n", type=int, default=30)
    p.add_argument("--strategies", type=_split, default=BENCH_DEFAULT)
    p.add_argument("--repetitions", dest="bench_repetitions", type=int, default=3)
    return parser


def _config(ns: argparse.Namespace) -> CliConfig:
    kw = {k: v for k, v in vars(ns).items() if v is not None}
    if ns.command == "bell":
        return CliConfig(
            command="bell",
            bell_n=kw.pop("n"),
            bell_k=kw.pop("k"),
            bell_args=tuple(kw.pop("args")),
        )
    return CliConfig(**kw)


# commands


def _load_cache(path: Path) -> SignedStirlingTable:
    try:
        obj = json.loads(path.read_text())
        table = SignedStirlingTable.from_json_obj(obj["table"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CliError(f"cache {path} unreadable: {exc}", EXIT_CACHE) from exc
    if obj.get("checksum") != table.checksum():
        raise CliError(f"cache {path} checksum mismatch", EXIT_CACHE)
    return table


def write_cache(path: Path, table: SignedStirlingTable) -> None:
    payload = {"checksum": table.checksum(), "table": table.to_json_obj()}
    path.write_text(json.dumps(payload, separators=(",", ":")))


def cmd_table(cfg: CliConfig) -> str:
    fresh = build_table(cfg.strategy, cfg.max_n)
    table = fresh
    path = cfg.cache_path
    if path is not None and path.exists():
        cached = _load_cache(path)
        if cached.max_n == cfg.max_n and cached.strategy == cfg.strategy:
            if not cached.values_equal(fresh):
                raise CliError(f"cache {path} disagrees with a fresh computation", EXIT_CACHE)
            table = cached
        else:
            write_cache(path, fresh)
    elif path is not None:
        write_cache(path, fresh)
    return table.to_csv() if cfg.format == "csv" else table.to_json() + "\n"


def cmd_bell(cfg: CliConfig) -> str:
    n, k = cfg.bell_n, cfg.bell_k
    try:
        args = [parse_rational(a) for a in cfg.bell_args]
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from exc
    try:
        value = bell_partitions(n, k, args)
        check = bell_series(n, k, args)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from exc
    if value != check:
        raise CliError(f"partition route {value} != series route {check}", EXIT_DISAGREE)
    return format_rational(value) + "\n"


def cmd_verify(cfg: CliConfig) -> tuple[str, int]:
    report = run_suite(SuiteConfig(max_n=cfg.max_n, identities=cfg.identities))
    problems = catalogue_problems(report)
    for p in problems:
        print(p, file=sys.stderr)
    return report.to_json() + "\n", EXIT_IDENTITY if problems else EXIT_OK


def cmd_bench(cfg: CliConfig) -> str:
    oracle = s_triangular(cfg.max_n + 1)
    reference = SignedStirlingTable.from_rows(oracle.rows()[: cfg.max_n + 1])
    rows = []
    for st in cfg.strategies:
        best = float("inf")
        for _ in range(cfg.bench_repetitions):
            clear_caches()
            start = time.perf_counter()
            built = build_table(st, cfg.max_n, oracle)
            best = min(best, time.perf_counter() - start)
            if not built.values_equal(reference):
                raise CliError(f"strategy {st} disagrees with the oracle at max_n={cfg.max_n}", EXIT_DISAGREE)
        rows.append((st, best))
    width = max([len("strategy")] + [len(st) for st, _ in rows])
    lines = [f"{'strategy':<{width}}  max_n  best_seconds  values"]
    for st, best in rows:
        lines.append(f"{st:<{width}}  {cfg.max_n:>5}  {best:>12.6f}  verified")
    return "\n".join(lines) + "\n"


def _protect_negative_literals(argv: list[str]) -> list[str]:
    """Let ``bell 3 1 -1/2 ...`` through argparse, which would read -1/2 as a flag."""
    if not argv or argv[0] != "bell" or "--" in argv:
        return argv
    for i, tok in enumerate(argv):
        if re.fullmatch(r"-\d+/\d+", tok):
            return argv[:i] + ["--"] + argv[i:]
    return argv


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = _protect_negative_literals(list(sys.argv[1:] if argv is None else argv))
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if ns.command == "table" and os.environ.get(CACHE_ENV):
        ns.cache_path = Path(os.environ[CACHE_ENV])
    code = EXIT_OK
    try:
        cfg = _config(ns)
        if cfg.command == "table":
            out = cmd_table(cfg)
        elif cfg.command == "bell":
            out = cmd_bell(cfg)
        elif cfg.command == "verify":
            out, code = cmd_verify(cfg)
        else:
            out = cmd_bench(cfg)
    except CliError as exc:
        print(f"stirling-lab: {exc}", file=sys.stderr)
        return exc.code
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
