"""Independent routes to the signed Stirling numbers of the first kind s(n, k).

The triangular recurrence :func:`s_triangular` is the reference; every other
route is checked against it.  Routes that finish with an exact division raise
:class:`BrokenIdentityError` when the division leaves a remainder, since that
can only mean the relation (or its implementation) is wrong.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .bell import faa_bell_term
from .exact_core import binom_standard, factorial, series_log1p, series_powers
from .table import STRATEGIES, SignedStirlingTable


class BrokenIdentityError(ArithmeticError):
    """An exactness checkpoint tripped: a quotient that must be an integer was not."""


def _exact_div(num: int, den: int, where: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise BrokenIdentityError(f"{where}: {num}/{den} is not an integer")
    return q


def _as_int(x: Fraction, where: str) -> int:
    if x.denominator != 1:
        raise BrokenIdentityError(f"{where}: {x} is not an integer")
    return x.numerator


def s_triangular(N: int) -> SignedStirlingTable:
    """s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k) from s(0,0) = 1."""
    if N < 0:
        raise ValueError("N must be >= 0")
    rows = [[1]]
    for n in range(1, N + 1):
        prev = rows[-1] + [0]
        rows.append([0] + [prev[k - 1] - (n - 1) * prev[k] for k in range(1, n + 1)])
    return SignedStirlingTable.from_rows(rows, "triangular")


def s_row_horizontal(n: int, oracle_row=None) -> list[int]:
    """Row n (k = 1..n) from s(n,n) = 1 by solving the horizontal relation downward in k.

    (n-k) s(n,k) = sum_{l=k+1}^{n} (-1)**(l-k) C(l,k-1) s(n,l)

    If ``oracle_row`` (k = 1..n) is given, the result is compared with it.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    row = {n: 1}
    for k in range(n - 1, 0, -1):
        acc = sum((-1) ** (l - k) * binom_standard(l, k - 1) * row[l] for l in range(k + 1, n + 1))
        row[k] = _exact_div(acc, n - k, f"row_horizontal s({n},{k})")
    out = [row[k] for k in range(1, n + 1)]
    if oracle_row is not None and list(oracle_row) != out:
        raise BrokenIdentityError(f"row_horizontal row {n} disagrees with the supplied oracle row")
    return out


def s_row_from_above(n: int, row_above) -> list[int]:
    """Row n (k = 1..n) from row n+1: s(n,k) = sum_{l=k}^{n} s(n+1,l+1) n**(l-k).

    ``row_above`` is the full row n+1, i.e. s(n+1,0..n+1).
    """
    if len(row_above) != n + 2:
        raise ValueError(f"row_above must hold s({n + 1},0..{n + 1}), got {len(row_above)} values")
    return [
        sum(row_above[l + 1] * n ** (l - k) for l in range(k, n + 1))
        for k in range(1, n + 1)
    ]


def s_column_vertical(n: int, k: int, table: SignedStirlingTable, variant: str = "corrected") -> int:
    """s(n,k) from column k-1 of rows < n.

    corrected: k s(n,k) = sum_{l=k-1}^{n-1} (-1)**(n-l-1) C(n,l) (n-l-1)! s(l,k-1)
    printed:   the same without the factor (n-l-1)!, which is wrong from
               (n,k) = (3,1) onward; kept so the discrepancy can be shown.
    """
    if k < 1 or n < k:
        raise ValueError(f"column_vertical needs 1 <= k <= n, got ({n},{k})")
    if variant not in ("corrected", "printed"):
        raise ValueError(f"unknown variant {variant!r}")
    table.require(n - 1)
    acc = 0
    for l in range(k - 1, n):
        weight = factorial(n - l - 1) if variant == "corrected" else 1
        acc += (-1) ** (n - l - 1) * binom_standard(n, l) * weight * table(l, k - 1)
    return _exact_div(acc, k, f"column_vertical s({n},{k})")


def s_vertical_factorial(n: int, k: int, table: SignedStirlingTable, variant: str = "corrected") -> int:
    """s(n+1,k+1) = sum_{l=k}^{n} sign(l) (n!/l!) s(l,k).

    ``variant='printed'`` uses sign(l) = (-1)**(l-1); ``'corrected'`` uses
    (-1)**(n-l).  The two differ by (-1)**(n+1), so they agree for odd n and
    are negatives of each other for even n.
    """
    if variant not in ("corrected", "printed"):
        raise ValueError(f"unknown variant {variant!r}")
    if k < 0 or n < k:
        raise ValueError(f"vertical_factorial needs 0 <= k <= n, got ({n},{k})")
    table.require(n)
    n_fact = factorial(n)
    acc = 0
    for l in range(k, n + 1):
        if variant == "printed":
            sign = -1 if (l - 1) % 2 else 1
        else:
            sign = -1 if (n - l) % 2 else 1
        acc += sign * (n_fact // factorial(l)) * table(l, k)
    return acc


def s_genfun(N: int) -> SignedStirlingTable:
    """s(n,k) = n!/k! [x**n] ln(1+x)**k."""
    if N < 1:
        raise ValueError("N must be >= 1")
    powers = series_powers(series_log1p(N), N)
    rows = []
    for n in range(N + 1):
        row = []
        for k in range(n + 1):
            val = powers[k][n] * factorial(n) / factorial(k)
            row.append(_as_int(val, f"genfun s({n},{k})"))
        rows.append(row)
    return SignedStirlingTable.from_rows(rows, "genfun")


def elementary_symmetric(values, j_max: int) -> list[Fraction]:
    """[e_0, ..., e_{j_max}](values) by the one-pass update e_i <- e_i + v e_{i-1}."""
    e = [Fraction(1)] + [Fraction(0)] * j_max
    for count, v in enumerate(values, 1):
        for i in range(min(count, j_max), 0, -1):
            e[i] += v * e[i - 1]
    return e


@lru_cache(maxsize=256)
def _reciprocal_esp(n: int) -> tuple[Fraction, ...]:
    return tuple(elementary_symmetric((Fraction(1, m) for m in range(1, n)), n - 1))


def s_nested_harmonic(n: int, k: int) -> int:
    """(-1)**(n-k) (n-1)! e_{k-1}(1, 1/2, ..., 1/(n-1)).

    The nested sums over strictly decreasing indices are exactly e_{k-1} of
    the reciprocals.  Valid for 1 <= k <= n (k = 1 gives e_0 = 1).
    """
    if not 1 <= k <= n:
        raise ValueError(f"nested_harmonic needs 1 <= k <= n, got ({n},{k})")
    e = _reciprocal_esp(n)[k - 1]
    return (-1) ** (n - k) * _as_int(e * factorial(n - 1), f"nested_harmonic s({n},{k})")


def s_harmonic_recurrence(N: int) -> SignedStirlingTable:
    """Column-by-column build of t(n,k) = (-1)**(n-k) s(n,k)/(n-1)!.

    t(n,k) = sum_{m=k-1}^{n-1} t(m,k-1)/m, seeded by t(m,1) = 1.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    t: dict[tuple[int, int], Fraction] = {(m, 1): Fraction(1) for m in range(1, N + 1)}
    for k in range(2, N + 1):
        # running prefix sum over m of t(m,k-1)/m
        acc = Fraction(0)
        for n in range(k, N + 1):
            acc += t[n - 1, k - 1] / (n - 1)
            t[n, k] = acc
    rows = [[1]]
    for n in range(1, N + 1):
        row = [0]
        for k in range(1, n + 1):
            val = t[n, k] * factorial(n - 1) * (-1) ** (n - k)
            row.append(_as_int(val, f"harmonic_recurrence s({n},{k})"))
        rows.append(row)
    return SignedStirlingTable.from_rows(rows, "harmonic_recurrence")


def s_diagonal_extension(
    d: int,
    k_max: int,
    seed: SignedStirlingTable | Callable[[int, int], int],
    access_log: list | None = None,
) -> list[int]:
    """Extend the diagonal n - k = d to k = d+1..k_max from its first d entries.

    s(k+d,k) = sum_{m=1}^{d} sum_{l=1}^{m} (-1)**(m+l) C(n,k-l) C(k-l,m-l) s(d+l,l)

    with n = k + d.  Only s(d+l, l) for l = 1..d is read; every read is
    appended to ``access_log`` when one is supplied.  Returns the values for
    k = d+1..k_max in order.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if k_max <= d:
        raise ValueError(f"k_max={k_max} <= d={d}: nothing to extend")
    known: dict[int, int] = {}
    for l in range(1, d + 1):
        known[l] = seed(d + l, l)
        if access_log is not None:
            access_log.append((d + l, l))
    out = []
    for k in range(d + 1, k_max + 1):
        n = k + d
        acc = 0
        for m in range(1, d + 1):
            for l in range(1, m + 1):
                acc += (
                    (-1) ** (m + l)
                    * binom_standard(n, k - l)
                    * binom_standard(k - l, m - l)
                    * known[l]
                )
        out.append(acc)
    return out


def s_faa_route(n: int, k: int) -> int:
    """C(n,k) sum_{m=1}^{min(k,n-k)} k!/(k-m)! B(n-k,m)(h'(0), ..., h^(n-k-m+1)(0)).

    h(x) = ln(1+x)/x; the n-k-th derivative of h**k at 0 gives s(n,k)/C(n,k).
    """
    if not 1 <= k <= n:
        raise ValueError(f"faa_route needs 1 <= k <= n, got ({n},{k})")
    if n == k:
        return 1
    d = n - k
    acc = Fraction(0)
    for m in range(1, min(k, d) + 1):
        acc += (factorial(k) // factorial(k - m)) * faa_bell_term(d, m)
    return _as_int(binom_standard(n, k) * acc, f"faa_route s({n},{k})")


# whole-table builders, one per strategy id


def _fill(N: int, cell: Callable[[int, int], int], strategy: str) -> SignedStirlingTable:
    rows = [[1]] + [[0] + [cell(n, k) for k in range(1, n + 1)] for n in range(1, N + 1)]
    return SignedStirlingTable.from_rows(rows, strategy)


def _bootstrap(N: int, strategy: str, step) -> SignedStirlingTable:
    """Grow a table row by row where each new row only reads the rows already built."""
    rows = [[1]]
    for n in range(1, N + 1):
        current = SignedStirlingTable.from_rows(rows, strategy)
        rows.append(step(n, current))
    return SignedStirlingTable.from_rows(rows, strategy)


def build_table(strategy: str, N: int, oracle: SignedStirlingTable | None = None) -> SignedStirlingTable:
    """Full triangle 0 <= k <= n <= N produced by ``strategy``.

    ``row_from_above`` reads row n+1 of the oracle and ``diagonal_extension``
    copies the region 2k <= n from it; both build an oracle of the needed size
    when none is given.  The vertical strategies bootstrap from s(0,0) = 1
    using only their own earlier rows.  Column k = 0 is the convention
    s(0,0) = 1, s(n,0) = 0.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if N < 0:
        raise ValueError("N must be >= 0")
    if strategy == "triangular":
        return s_triangular(N)
    if strategy == "genfun":
        return s_genfun(N) if N >= 1 else SignedStirlingTable.from_rows([[1]], strategy)
    if strategy == "harmonic_recurrence":
        return s_harmonic_recurrence(N) if N >= 1 else SignedStirlingTable.from_rows([[1]], strategy)
    if strategy == "row_horizontal":
        rows = [[1]] + [[0] + s_row_horizontal(n) for n in range(1, N + 1)]
        return SignedStirlingTable.from_rows(rows, strategy)
    if strategy == "row_from_above":
        oracle = _oracle(oracle, N + 1)
        rows = [[1]] + [[0] + s_row_from_above(n, oracle.row(n + 1)) for n in range(1, N + 1)]
        return SignedStirlingTable.from_rows(rows, strategy)
    if strategy == "column_vertical":
        return _bootstrap(
            N, strategy,
            lambda n, t: [0] + [s_column_vertical(n, k, t) for k in range(1, n + 1)],
        )
    if strategy in ("vertical_factorial_printed", "vertical_factorial_corrected"):
        variant = strategy.rsplit("_", 1)[1]
        # row n comes from row n-1: s(n,k) = s((n-1)+1, (k-1)+1)
        return _bootstrap(
            N, strategy,
            lambda n, t: [0] + [s_vertical_factorial(n - 1, k - 1, t, variant) for k in range(1, n + 1)],
        )
    if strategy == "nested_harmonic":
        return _fill(N, s_nested_harmonic, strategy)
    if strategy == "faa_route":
        return _fill(N, s_faa_route, strategy)
    # diagonal_extension
    oracle = _oracle(oracle, N)
    rows = [oracle.row(n) for n in range(N + 1)]
    for d in range(1, N):
        k_max = N - d
        if k_max <= d:
            break
        for k, v in enumerate(s_diagonal_extension(d, k_max, oracle), start=d + 1):
            rows[k + d][k] = v
    return SignedStirlingTable.from_rows(rows, strategy)


def _oracle(oracle: SignedStirlingTable | None, N: int) -> SignedStirlingTable:
    if oracle is None or oracle.max_n < N:
        return s_triangular(N)
    return oracle


def clear_caches() -> None:
    """Drop memoized intermediate values so repeated timings start cold."""
    faa_bell_term.cache_clear()
    _reciprocal_esp.cache_clear()
