"""Divisibility, gcd/Bezout certificates, and exhaustive solution search.

``b | a`` means there is an integer cofactor ``p`` with ``a == b * p``.
The witness-producing :func:`divides` makes that existential concrete,
and :func:`find_all` answers the classic "find every integer such that
..." exercise over an explicit finite interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .intops import floor_div, floor_mod, isqrt

__all__ = [
    "DividesWitness",
    "BezoutCert",
    "divides",
    "gcd",
    "ext_gcd",
    "positive_divisors",
    "find_all",
]


@dataclass(frozen=True)
class DividesWitness:
    """Certificate that ``divisor | dividend``: ``dividend == divisor * cofactor``."""

    divisor: int
    dividend: int
    cofactor: int


@dataclass(frozen=True)
class BezoutCert:
    """Bezout certificate: ``g == u*a + v*b`` with ``g == gcd(a, b) >= 0``."""

    a: int
    b: int
    g: int
    u: int
    v: int


def divides(b: int, a: int) -> DividesWitness | None:
    """Witness for ``b | a``, or ``None`` when ``b`` does not divide ``a``.

    ``0 | a`` holds only for ``a == 0`` (the cofactor is then 0 by
    convention); for ``b != 0`` the test is simply a zero remainder.
    """
    if b == 0:
        return DividesWitness(0, 0, 0) if a == 0 else None
    if floor_mod(a, b) != 0:
        return None
    return DividesWitness(b, a, floor_div(a, b))


def gcd(a: int, b: int) -> int:
    """Nonnegative greatest common divisor; ``gcd(0, 0) == 0``."""
    return math.gcd(a, b)


def ext_gcd(a: int, b: int) -> BezoutCert:
    """Extended Euclid: a :class:`BezoutCert` for ``a`` and ``b``.

    The coefficients are whatever the algorithm produces; only the
    certificate equation is guaranteed, not a canonical ``(u, v)``.
    """
    # Run on magnitudes, then push the signs into the coefficients.
    old_r, r = abs(a), abs(b)
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    sign_a = -1 if a < 0 else 1
    sign_b = -1 if b < 0 else 1
    return BezoutCert(a, b, old_r, old_u * sign_a, old_v * sign_b)


def positive_divisors(n: int) -> list[int]:
    """All positive divisors of ``n != 0``, ascending.

    Raises:
        ValueError: if ``n`` is zero (every integer divides 0).
    """
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    n = abs(n)
    small = []
    large = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def find_all(pred: Callable[[int], bool], lo: int, hi: int) -> list[int]:
    """Every ``x`` in ``[lo, hi]`` satisfying ``pred``, ascending.

    The interval is part of the answer's meaning: the returned list is
    complete *for the interval searched*, nothing is claimed outside it.

    Raises:
        ValueError: if ``lo > hi``.
    """
    if lo > hi:
        raise ValueError(f"empty search interval: [{lo}..{hi}]")
    return [x for x in range(lo, hi + 1) if pred(x)]
