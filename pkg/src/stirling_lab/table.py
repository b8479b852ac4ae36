"""Triangular storage for signed Stirling numbers of the first kind, plus CSV/JSON forms."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

STRATEGIES = (
    "triangular",
    "row_horizontal",
    "row_from_above",
    "column_vertical",
    "vertical_factorial_printed",
    "vertical_factorial_corrected",
    "genfun",
    "nested_harmonic",
    "harmonic_recurrence",
    "diagonal_extension",
    "faa_route",
)


class TableRangeError(ValueError):
    """Raised when a lookup or a formula needs rows beyond a table's max_n."""


def _index(n: int, k: int) -> int:
    return n * (n + 1) // 2 + k


@dataclass(frozen=True)
class SignedStirlingTable:
    """s(n, k) for 0 <= k <= n <= max_n in a flat row-major triangle."""

    max_n: int
    entries: tuple[int, ...]
    strategy: str = "triangular"

    def __post_init__(self):
        if self.max_n < 0:
            raise ValueError("max_n must be >= 0")
        if len(self.entries) != _index(self.max_n + 1, 0):
            raise ValueError(
                f"expected {_index(self.max_n + 1, 0)} entries for max_n={self.max_n}, "
                f"got {len(self.entries)}"
            )
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")

    @classmethod
    def from_rows(cls, rows, strategy: str = "triangular") -> SignedStirlingTable:
        rows = [list(r) for r in rows]
        for n, r in enumerate(rows):
            if len(r) != n + 1:
                raise ValueError(f"row {n} has {len(r)} entries, expected {n + 1}")
        flat = tuple(int(v) for r in rows for v in r)
        return cls(len(rows) - 1, flat, strategy)

    def __call__(self, n: int, k: int) -> int:
        return self.get(n, k)

    def get(self, n: int, k: int) -> int:
        if n < 0 or k < 0:
            raise ValueError(f"s({n},{k}) has a negative index")
        if n > self.max_n:
            raise TableRangeError(f"s({n},{k}) needs max_n >= {n}, table has {self.max_n}")
        if k > n:
            return 0
        return self.entries[_index(n, k)]

    def row(self, n: int) -> list[int]:
        if n > self.max_n:
            raise TableRangeError(f"row {n} beyond max_n={self.max_n}")
        return list(self.entries[_index(n, 0) : _index(n + 1, 0)])

    def rows(self) -> list[list[int]]:
        return [self.row(n) for n in range(self.max_n + 1)]

    def require(self, n: int) -> None:
        if n > self.max_n:
            raise TableRangeError(f"need rows up to {n}, table has max_n={self.max_n}")

    def values_equal(self, other: SignedStirlingTable) -> bool:
        return self.max_n == other.max_n and self.entries == other.entries

    # serialization

    def to_csv(self) -> str:
        lines = [
            f"{n},{k},{v}"
            for n in range(self.max_n + 1)
            for k, v in enumerate(self.row(n))
        ]
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {"max_n": self.max_n, "strategy": self.strategy, "entries": self.rows()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> SignedStirlingTable:
        table = cls.from_rows(obj["entries"], obj["strategy"])
        if table.max_n != obj["max_n"]:
            raise ValueError("max_n does not match the number of rows")
        return table

    @classmethod
    def from_json(cls, text: str) -> SignedStirlingTable:
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def from_csv(cls, text: str, strategy: str = "triangular") -> SignedStirlingTable:
        rows: list[list[int]] = []
        for line in text.splitlines():
            if not line.strip():
                continue
            n, k, v = (int(p) for p in line.split(","))
            if n == len(rows):
                rows.append([])
            if n != len(rows) - 1 or k != len(rows[n]):
                raise ValueError(f"CSV out of row-major order at {line!r}")
            rows[n].append(v)
        return cls.from_rows(rows, strategy)

    def checksum(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()
