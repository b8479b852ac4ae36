"""Partial Bell polynomials B(n, k)(x_1, ..., x_{n-k+1}) over exact rationals.

Three routes are provided and kept independent of each other:

* :func:`bell_partitions` sums over the multiplicity vectors of partitions of n
  into k parts,
* :func:`bell_series` extracts a coefficient of the k-th power of the
  exponential generating series of the arguments,
* :func:`bell_recurrence` uses B(n,k) = sum_i C(n-1,i-1) x_i B(n-i,k-1).

The special argument sequences that have closed forms (factorials,
fractional factorials, the shifted factorials with x_1 = 0) and the
derivatives of exp(+-1/t) live here as well.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .exact_core import (
    RationalSeries,
    as_rational,
    binom_standard,
    check_args,
    factorial,
    series_powers,
)
from .table import SignedStirlingTable


def _check_nk(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"B({n},{k}) needs nonnegative indices")
    if k > n:
        raise ValueError(f"B({n},{k}) undefined for k > n")


def _arity(n: int, k: int) -> int:
    return n - k + 1 if k >= 1 else 0


def partition_terms(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Multiplicity vectors (l_1, ..., l_{n-k+1}) with sum i*l_i = n and sum l_i = k.

    Yielded in lexicographic order.  B(0,0) has the single empty term; B(n,0)
    for n >= 1 has none.
    """
    _check_nk(n, k)
    if k == 0:
        if n == 0:
            yield ()
        return
    width = n - k + 1
    mult = [0] * width

    def rec(i: int, rem_n: int, rem_k: int):
        if rem_k == 0:
            if rem_n == 0:
                yield tuple(mult)
            return
        # every remaining part has size between i and width
        if i > width or rem_n < rem_k * i or rem_n > rem_k * width:
            return
        for l in range(0, rem_k + 1):
            if l * i > rem_n:
                break
            mult[i - 1] = l
            yield from rec(i + 1, rem_n - l * i, rem_k - l)
        mult[i - 1] = 0

    yield from rec(1, n, k)


def bell_partitions(n: int, k: int, args: Sequence) -> Fraction:
    """Sum of n!/prod(l_i!) * prod((x_i/i!)**l_i) over all partition terms.

    With x_i/i! = p_i/q over a common denominator q, each term equals
    n!/(k! q**k) * multinomial(k; l) * prod(p_i**l_i), so the enumeration runs
    on integers and divides once at the end.
    """
    _check_nk(n, k)
    if k == 0:
        return Fraction(1 if n == 0 else 0)
    width = _arity(n, k)
    xs = check_args(args, width)
    ws = [xs[i - 1] / factorial(i) for i in range(1, width + 1)]
    q = math.lcm(*(w.denominator for w in ws))
    ps = [w.numerator * (q // w.denominator) for w in ws]
    pows = [[p**l for l in range(k + 1)] for p in ps]

    total = 0

    def rec(i: int, rem_n: int, rem_k: int, prod: int):
        nonlocal total
        if rem_k == 0:
            if rem_n == 0:
                total += prod
            return
        if i > width or rem_n < rem_k * i or rem_n > rem_k * width:
            return
        pw = pows[i - 1]
        if pw[1] == 0:
            rec(i + 1, rem_n, rem_k, prod)
            return
        for l in range(0, rem_k + 1):
            used = l * i
            if used > rem_n:
                break
            rec(i + 1, rem_n - used, rem_k - l, prod * math.comb(rem_k, l) * pw[l])

    rec(1, n, k, 1)
    return Fraction(total * factorial(n), factorial(k) * q**k)


def _egf(xs: Sequence[Fraction], order: int) -> RationalSeries:
    coeffs = [Fraction(0)] + [xs[m - 1] / factorial(m) for m in range(1, order + 1)]
    return RationalSeries(tuple(coeffs))


def bell_series(n: int, k: int, args: Sequence) -> Fraction:
    """n!/k! times the t**n coefficient of (sum_m x_m t**m/m!)**k."""
    _check_nk(n, k)
    if k == 0:
        return Fraction(1 if n == 0 else 0)
    xs = check_args(args, _arity(n, k))
    xs = tuple(xs) + (Fraction(0),) * max(0, n - len(xs))
    # x_m with m > n-k+1 cannot reach t**n inside a k-th power
    xs = tuple(x if m <= n - k + 1 else Fraction(0) for m, x in enumerate(xs[:n], 1))
    power = series_powers(_egf(xs, n), k)[k]
    return power[n] * factorial(n) / factorial(k)


def bell_series_table(n_max: int, args: Sequence) -> dict[tuple[int, int], Fraction]:
    """Series-route values B(n,k) for all 0 <= k <= n <= n_max sharing one argument vector.

    Every x_m is used at full length, so this equals :func:`bell_series` cell
    by cell (entries beyond x_{n-k+1} never reach t**n).
    """
    xs = check_args(args, n_max)
    powers = series_powers(_egf(xs, n_max), n_max)
    out = {}
    for n in range(n_max + 1):
        for k in range(n + 1):
            out[n, k] = powers[k][n] * factorial(n) / factorial(k)
    return out


def bell_recurrence(n: int, k: int, args: Sequence) -> Fraction:
    """B(n,k) = sum_{i=1}^{n-k+1} C(n-1,i-1) x_i B(n-i,k-1)."""
    _check_nk(n, k)
    if k == 0:
        return Fraction(1 if n == 0 else 0)
    xs = check_args(args, _arity(n, k))
    table = {(0, 0): Fraction(1)}
    for nn in range(1, n + 1):
        table[nn, 0] = Fraction(0)
    for kk in range(1, k + 1):
        for nn in range(kk, n - k + kk + 1):
            acc = Fraction(0)
            for i in range(1, nn - kk + 2):
                prev = table.get((nn - i, kk - 1), Fraction(0))
                if prev:
                    acc += binom_standard(nn - 1, i - 1) * xs[i - 1] * prev
            table[nn, kk] = acc
    return table[n, k]


# argument sequences with closed forms

def factorial_args(m: int) -> tuple[Fraction, ...]:
    """(1!, 2!, ..., m!)"""
    return tuple(Fraction(factorial(i)) for i in range(1, m + 1))


def fractional_args(m: int) -> tuple[Fraction, ...]:
    """(1!/2, 2!/3, ..., m!/(m+1))"""
    return tuple(Fraction(factorial(i), i + 1) for i in range(1, m + 1))


def zero_factorial_args(m: int) -> tuple[Fraction, ...]:
    """(0, 1!, 2!, ..., (m-1)!)"""
    return tuple(Fraction(0) if i == 1 else Fraction(factorial(i - 1)) for i in range(1, m + 1))


def bell_fractional_closed_form(n: int, k: int, table: SignedStirlingTable) -> Fraction:
    """B(n,k)(1!/2, ..., (n-k+1)!/(n-k+2)) through Stirling numbers s(n+m, m)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    table.require(n + k)
    acc = Fraction(0)
    for m in range(1, k + 1):
        acc += Fraction((-1) ** m * binom_standard(k, m), binom_standard(n + m, n)) * table(n + m, m)
    return (-1) ** (n - k) * acc / factorial(k)


def bell_zero_factorial_closed_form(n: int, k: int, table: SignedStirlingTable) -> Fraction:
    """B(n,k)(0, 1!, ..., (n-k)!) through Stirling numbers s(n-m, k-m)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    table.require(n)
    acc = Fraction(0)
    for m in range(0, k + 1):
        acc += Fraction(
            (-1) ** m * binom_standard(k, m), binom_standard(n - m, n - k)
        ) * table(n - m, k - m)
    return (-1) ** (n - k) * binom_standard(n, k) * acc


def bell_factorial_closed_form(n: int, k: int) -> int:
    """B(n,k)(1!, 2!, ...) = C(n,k) C(n-1,k-1) (n-k)!"""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return binom_standard(n, k) * binom_standard(n - 1, k - 1) * factorial(n - k)


def lah_a(i: int, k: int) -> int:
    """a(i,k) = C(i,k) C(i-1,k) k!; a(n, n-k) is the Lah number L(n,k)."""
    if i < 1 or not 0 <= k <= i - 1:
        raise ValueError(f"lah_a needs i >= 1 and 0 <= k <= i-1, got i={i}, k={k}")
    return binom_standard(i, k) * binom_standard(i - 1, k) * factorial(k)


def faa_di_bruno(n: int, f_derivs: Sequence, h_derivs: Sequence) -> Fraction:
    """n-th derivative of f(h(t)) from f^(1..n) at h(t0) and h^(1..n) at t0."""
    if n < 1:
        raise ValueError("faa_di_bruno needs n >= 1")
    f = check_args(f_derivs, n)
    h = check_args(h_derivs, n)
    return sum(
        (f[k - 1] * bell_partitions(n, k, h[: n - k + 1]) for k in range(1, n + 1)),
        Fraction(0),
    )


def h_derivative_at_zero(l: int) -> Fraction:
    """Limit at x -> 0 of the l-th derivative of h(x) = ln(1+x)/x: (-1)**l l!/(l+1)."""
    if l < 1:
        raise ValueError("only l >= 1; h(0) = 1 is handled by callers")
    return Fraction((-1) ** l * factorial(l), l + 1)


def h_derivatives_at_zero(m: int) -> tuple[Fraction, ...]:
    return tuple(h_derivative_at_zero(l) for l in range(1, m + 1))


def exp_reciprocal_coeffs(i: int, negative_argument: bool = False) -> list[int]:
    """Coefficients of t**k, k = 0..i-1, in the bracket of d^i/dt^i exp(+-1/t).

    d^i/dt^i exp(1/t)  = (-1)**i exp(1/t)  t**(-2i) sum_k a(i,k) t**k
    d^i/dt^i exp(-1/t) =         exp(-1/t) t**(-2i) sum_k (-1)**k a(i,k) t**k
    """
    if i < 1:
        raise ValueError("i must be >= 1")
    sign = -1 if negative_argument else 1
    return [sign**k * lah_a(i, k) for k in range(i)]


def exp_reciprocal_bell_coeffs(i: int, negative_argument: bool = False) -> list[Fraction]:
    """Faa di Bruno expansion of d^i/dt^i exp(+-1/t) / exp(+-1/t) in powers of u = 1/t.

    Entry k-1 (k = 1..i) is the coefficient of u**(i+k).  The j-th derivative
    of +-1/t is +-(-1)**j j! u**(j+1), so each Bell monomial has degree i+k in
    u and its coefficient is B(i,k) at the numeric arguments +-(-1)**j j!.
    """
    if i < 1:
        raise ValueError("i must be >= 1")
    sign = -1 if negative_argument else 1
    args = [sign * (-1) ** j * factorial(j) for j in range(1, i + 1)]
    return [bell_partitions(i, k, args[: i - k + 1]) for k in range(1, i + 1)]


def exp_reciprocal_closed_coeffs(i: int, negative_argument: bool = False) -> list[int]:
    """The same u**(i+k) coefficients read off :func:`exp_reciprocal_coeffs`.

    t**(-2i) t**j = u**(2i-j), so u**(i+k) comes from j = i-k.
    """
    coeffs = exp_reciprocal_coeffs(i, negative_argument)
    prefactor = 1 if negative_argument else (-1) ** i
    return [prefactor * coeffs[i - k] for k in range(1, i + 1)]


@lru_cache(maxsize=None)
def faa_bell_term(d: int, m: int) -> Fraction:
    """B(d,m)(h'(0), ..., h^(d-m+1)(0)), cached because it does not depend on k."""
    return bell_partitions(d, m, h_derivatives_at_zero(d - m + 1))


__all__ = [
    "partition_terms",
    "bell_partitions",
    "bell_series",
    "bell_series_table",
    "bell_recurrence",
    "factorial_args",
    "fractional_args",
    "zero_factorial_args",
    "bell_fractional_closed_form",
    "bell_zero_factorial_closed_form",
    "bell_factorial_closed_form",
    "lah_a",
    "faa_di_bruno",
    "h_derivative_at_zero",
    "h_derivatives_at_zero",
    "exp_reciprocal_coeffs",
    "exp_reciprocal_bell_coeffs",
    "exp_reciprocal_closed_coeffs",
    "faa_bell_term",
    "as_rational",
]
