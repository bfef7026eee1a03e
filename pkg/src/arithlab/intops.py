"""Exact integer arithmetic with fixed division conventions.

Python's ``int`` is the value carrier everywhere in this package: it is
already an arbitrary-precision signed integer, so no wrapper type is
needed.  What this module pins down is the behaviour at the edges:

* division is *floor* division (quotient rounded towards minus
  infinity), so for ``b > 0`` the remainder lies in ``0 <= r < b`` and
  for ``b < 0`` in ``b < r <= 0``;
* division by zero is total: ``floor_div(a, 0) == 0`` and
  ``floor_mod(a, 0) == a``, which keeps the identity
  ``a == b * floor_div(a, b) + floor_mod(a, b)`` true for every pair;
* exponents are natural numbers, with ``0 ** 0 == 1``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

__all__ = [
    "DivResult",
    "floor_div",
    "floor_mod",
    "div_mod",
    "pow_nat",
    "isqrt",
    "mod_pow",
    "parse_decimal",
    "to_decimal",
]


class DivResult(NamedTuple):
    """Quotient/remainder pair satisfying ``a == b * quot + rem``."""

    quot: int
    rem: int


def floor_div(a: int, b: int) -> int:
    """Floor quotient of ``a`` by ``b``; 0 when ``b == 0``."""
    if b == 0:
        return 0
    return a // b


def floor_mod(a: int, b: int) -> int:
    """Floor remainder of ``a`` by ``b``; ``a`` itself when ``b == 0``.

    The zero case is forced by the division identity with a zero
    quotient; it also makes ``b | a  <=>  floor_mod(a, b) == 0`` hold
    for ``b == 0`` (only 0 is divisible by 0).
    """
    if b == 0:
        return a
    return a % b


def div_mod(a: int, b: int) -> DivResult:
    """Quotient and remainder in one go, with the same conventions."""
    if b == 0:
        return DivResult(0, a)
    q, r = divmod(a, b)
    return DivResult(q, r)


def pow_nat(a: int, n: int) -> int:
    """``a`` raised to a natural exponent, with ``a ** 0 == 1``.

    Raises:
        ValueError: if ``n`` is negative.
    """
    if n < 0:
        raise ValueError(f"exponent must be nonnegative, got {n}")
    return a**n


def isqrt(n: int) -> int:
    """Integer (floor) square root: the largest ``s >= 0`` with ``s*s <= n``.

    Raises:
        ValueError: if ``n`` is negative.
    """
    if n < 0:
        raise ValueError(f"isqrt of negative number: {n}")
    return math.isqrt(n)


def mod_pow(a: int, e: int, m: int) -> int:
    """``floor_mod(a ** e, m)`` by square-and-multiply.

    Never materialises ``a ** e``; the result has the sign of ``m``,
    matching :func:`floor_mod`.

    Raises:
        ValueError: if ``e`` is negative or ``m`` is zero.
    """
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got {e}")
    if m == 0:
        raise ValueError("modulus must be nonzero")
    return pow(a, e, m)


def parse_decimal(text: str) -> int:
    """Parse the canonical decimal rendering of an integer.

    Accepts an optional leading ``-`` followed by digits, with no
    leading zeros except for ``"0"`` itself.  ``"-0"`` is rejected.

    Raises:
        ValueError: if ``text`` is not canonical.
    """
    body = text[1:] if text.startswith("-") else text
    if not body.isdigit():
        raise ValueError(f"not a decimal integer: {text!r}")
    if len(body) > 1 and body[0] == "0":
        raise ValueError(f"leading zeros not allowed: {text!r}")
    if text.startswith("-") and body == "0":
        raise ValueError('"-0" is not canonical')
    return int(text)


def to_decimal(n: int) -> str:
    """Canonical decimal rendering; inverse of :func:`parse_decimal`."""
    return str(n)
