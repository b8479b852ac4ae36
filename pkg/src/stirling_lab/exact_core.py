"""Exact arithmetic helpers: factorials, binomials and truncated rational power series."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def falling_factorial(a: int, b: int) -> int:
    """a (a-1) ... (a-b+1), with the empty product equal to 1."""
    out = 1
    for i in range(b):
        out *= a - i
    return out


def binom_standard(n: int, k: int) -> int:
    """Binomial coefficient for a nonnegative upper index; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binom_standard needs n >= 0, got n={n}; use binom_extended")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binom_extended(a: int, b: int) -> int:
    """Binomial coefficient for arbitrary integer arguments.

    Nonnegative ``a`` behaves like :func:`binom_standard`.  For negative ``a``
    a negative lower index is first reflected to ``a - b``; a nonnegative lower
    index is then evaluated as ``a(a-1)...(a-b+1)/b!``.  If the reflected index
    is still negative the value is 0.  This gives C(0,0) = C(-1,-1) = 1 and
    C(-1,-2) = -1.
    """
    if a >= 0:
        return binom_standard(a, b)
    if b < 0:
        b = a - b
        if b < 0:
            return 0
    return falling_factorial(a, b) // math.factorial(b)


CONVENTIONS = (
    "binom_extended: a>=0 -> standard C(a,b) (0 unless 0<=b<=a); "
    "a<0,b<0 -> reflect b:=a-b (0 if still negative); "
    "a<0,b>=0 -> a(a-1)...(a-b+1)/b!"
)


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, Fraction or 'p/q' text")
    return Fraction(x)


@dataclass(frozen=True)
class RationalSeries:
    """Power series truncated after the x**order term.

    Mixed-order arithmetic truncates to the smaller order.
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(
            self, "coefficients", tuple(as_rational(c) for c in self.coefficients)
        )

    @classmethod
    def from_coefficients(cls, coeffs: Iterable, order: int | None = None) -> RationalSeries:
        coeffs = [as_rational(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = (coeffs + [Fraction(0)] * (order + 1))[: order + 1]
        return cls(tuple(coeffs))

    @classmethod
    def one(cls, order: int) -> RationalSeries:
        return cls.from_coefficients([1], order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __add__(self, other: RationalSeries) -> RationalSeries:
        order = min(self.order, other.order)
        return RationalSeries(
            tuple(self[i] + other[i] for i in range(order + 1))
        )

    def __mul__(self, other: RationalSeries) -> RationalSeries:
        return series_mul(self, other)

    def truncate(self, order: int) -> RationalSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return RationalSeries(self.coefficients[: order + 1])


def series_log1p(order: int) -> RationalSeries:
    """Mercator series of ln(1+x)."""
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [Fraction(0)] + [Fraction((-1) ** (m + 1), m) for m in range(1, order + 1)]
    return RationalSeries(tuple(coeffs))


def series_mul(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    order = min(a.order, b.order)
    ac, bc = a.coefficients, b.coefficients
    out = []
    for n in range(order + 1):
        acc = Fraction(0)
        for i in range(n + 1):
            if ac[i] and bc[n - i]:
                acc += ac[i] * bc[n - i]
        out.append(acc)
    return RationalSeries(tuple(out))


def series_pow(a: RationalSeries, k: int) -> RationalSeries:
    if k < 0:
        raise ValueError("k must be >= 0")
    out = RationalSeries.one(a.order)
    for _ in range(k):
        out = series_mul(out, a)
    return out


def series_powers(a: RationalSeries, k_max: int) -> list[RationalSeries]:
    """[a**0, a**1, ..., a**k_max] by repeated multiplication."""
    out = [RationalSeries.one(a.order)]
    for _ in range(k_max):
        out.append(series_mul(out[-1], a))
    return out


def format_rational(x: Fraction | int) -> str:
    x = as_rational(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``p`` or ``p/q`` with an optional sign; nothing else is accepted."""
    m = re.fullmatch(r"\s*([+-]?\d+)(?:/(\d+))?\s*", text)
    if not m:
        raise ValueError(f"malformed rational literal {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def check_args(values: Sequence, needed: int) -> tuple[Fraction, ...]:
    vals = tuple(as_rational(v) for v in values)
    if len(vals) < needed:
        raise ValueError(f"need {needed} arguments x_1..x_{needed}, got {len(vals)}")
    return vals
