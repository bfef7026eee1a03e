"""Finite sums, factorials and binomial coefficients over the naturals.

Everything here lives in plain nonnegative integers, no abstract
algebra: sums are written with a first index and a summand count,
subtraction is truncated (``monus``), and the binomial coefficient is
*defined* by Pascal's rule, which makes it a total function on pairs of
naturals with value 0 whenever ``n < k``.  The factorial formula
``n! / (k! (n-k)!)`` is kept as a second, independently computed route
whose exact-division step is checked at run time.
"""

from __future__ import annotations

import threading
from typing import Callable

__all__ = [
    "monus",
    "sum_n",
    "sum_range",
    "fact",
    "binom",
    "binom_fact",
    "pascal_row",
]


def _check_nat(value: int, name: str) -> None:
    if value < 0:
        raise ValueError(f"{name} must be a natural number, got {value}")


def monus(a: int, b: int) -> int:
    """Truncated subtraction on naturals: ``a - b``, but 0 when ``a < b``."""
    _check_nat(a, "a")
    _check_nat(b, "b")
    return a - b if a >= b else 0


def sum_n(a: int, n: int, f: Callable[[int], int]) -> int:
    """``f(a) + f(a+1) + ... + f(a+n-1)``; the empty sum (n == 0) is 0."""
    _check_nat(a, "a")
    _check_nat(n, "n")
    return sum(f(a + i) for i in range(n))


def sum_range(a: int, b: int, f: Callable[[int], int]) -> int:
    """``f(a) + ... + f(b)`` with both bounds included; 0 when ``a > b``."""
    _check_nat(a, "a")
    _check_nat(b, "b")
    if a > b:
        return 0
    return sum_n(a, b - a + 1, f)


def fact(n: int) -> int:
    """``n!`` with ``0! == 1``."""
    _check_nat(n, "n")
    result = 1
    for i in range(2, n + 1):
        result *= i
    return result


# Rows of Pascal's triangle, grown on demand.  Appending complete rows
# under a lock keeps concurrent readers safe; rows already in the list
# are immutable tuples.
_rows: list[tuple[int, ...]] = [(1,)]
_rows_lock = threading.Lock()


def pascal_row(n: int) -> tuple[int, ...]:
    """Row ``n`` of Pascal's triangle: ``(binom(n,0), ..., binom(n,n))``."""
    _check_nat(n, "n")
    if n >= len(_rows):
        with _rows_lock:
            while len(_rows) <= n:
                prev = _rows[-1]
                mid = tuple(prev[i] + prev[i + 1] for i in range(len(prev) - 1))
                _rows.append((1, *mid, 1))
    return _rows[n]


def binom(n: int, k: int) -> int:
    """Binomial coefficient by Pascal's rule; 0 when ``n < k``."""
    _check_nat(n, "n")
    _check_nat(k, "k")
    if k > n:
        return 0
    return pascal_row(n)[k]


def binom_fact(n: int, k: int) -> int:
    """Binomial coefficient by the factorial formula, for ``k <= n``.

    The division is exact for every such pair; that exactness is a
    theorem, not an assumption, so it is asserted on every call.

    Raises:
        ValueError: if ``k > n`` (the factorial formula does not cover
            the irregular case).
        ArithmeticError: if the division were inexact (never happens).
    """
    _check_nat(n, "n")
    _check_nat(k, "k")
    if k > n:
        raise ValueError(f"factorial formula needs k <= n, got ({n}, {k})")
    q, r = divmod(fact(n), fact(k) * fact(n - k))
    if r != 0:
        raise ArithmeticError(f"inexact binomial division for ({n}, {k})")
    return q
