"""Primality by trial division up to the integer square root.

Deliberately naive: dividing by 2, 3, ..., isqrt(n) is what a first
arithmetic course expects, and it stays fast up to around 8 decimal
digits.  Negative numbers and 0, 1 are not prime.

Two alternative characterizations of primality are provided as
directly checkable predicates; they agree with :func:`is_prime`
everywhere (the test suite pins this down).
"""

from __future__ import annotations

from dataclasses import dataclass

from .intops import isqrt

__all__ = [
    "PrimalityVerdict",
    "is_prime",
    "characterization_strict_divisors",
    "characterization_below_sqrt",
]


@dataclass(frozen=True)
class PrimalityVerdict:
    """Outcome of a primality test.

    ``smallest_factor`` is present exactly when ``n > 1`` is composite;
    it is then the least divisor greater than 1 (necessarily prime and
    at most ``isqrt(n)``).
    """

    n: int
    is_prime: bool
    smallest_factor: int | None = None


def is_prime(n: int) -> PrimalityVerdict:
    """Trial-division verdict for ``n``; total over all integers."""
    if n <= 1:
        return PrimalityVerdict(n, False)
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return PrimalityVerdict(n, False, d)
    return PrimalityVerdict(n, True)


def characterization_strict_divisors(p: int) -> bool:
    """Primality as "no divisors besides -1, 1, p, -p", for ``p > 1``.

    Divisors of ``p != 0`` come in sign pairs and are bounded by ``|p|``
    in magnitude, so scanning ``2 .. p-1`` for a divisor decides the
    quantified form over ``-p .. p``.
    """
    if p <= 1:
        return False
    return all(p % a != 0 for a in range(2, p))


def characterization_below_sqrt(p: int) -> bool:
    """Primality as "1 < p and no divisor a with 1 < a <= isqrt(p)"."""
    if p <= 1:
        return False
    return all(p % a != 0 for a in range(2, isqrt(p) + 1))
