"""Decimal digit sequences and digit-based divisibility rules.

A :class:`Digits` value is the canonical base-10 writing of a
nonnegative integer, most significant digit first.  It is never empty
and never has a leading zero (except for the single digit 0), so the
round-trip laws with :func:`to_digits` / :func:`from_digits` hold
unconditionally.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Digits",
    "to_digits",
    "from_digits",
    "digit_sum",
    "last_digit",
    "repeat_block",
]


@dataclass(frozen=True)
class Digits:
    """Non-empty canonical decimal digit sequence, most significant first."""

    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.digits:
            raise ValueError("digit sequence must be non-empty")
        if any(not (0 <= d <= 9) for d in self.digits):
            raise ValueError(f"digits must be in 0..9: {self.digits}")
        if len(self.digits) > 1 and self.digits[0] == 0:
            raise ValueError(f"leading zero in {self.digits}")

    def __iter__(self):
        return iter(self.digits)

    def __len__(self) -> int:
        return len(self.digits)


def to_digits(n: int) -> Digits:
    """Canonical decimal digits of a nonnegative integer.

    Raises:
        ValueError: if ``n`` is negative.
    """
    if n < 0:
        raise ValueError(f"no digit representation for negative {n}")
    return Digits(tuple(int(c) for c in str(n)))


def from_digits(d: Digits) -> int:
    """The integer written by ``d``; inverse of :func:`to_digits`."""
    value = 0
    for digit in d.digits:
        value = value * 10 + digit
    return value


def digit_sum(d: Digits) -> int:
    """Sum of the digits."""
    return sum(d.digits)


def last_digit(d: Digits) -> int:
    """Least significant digit."""
    return d.digits[-1]


def repeat_block(d: Digits) -> Digits:
    """Digits of the block written twice in a row (abc -> abcabc).

    Equals ``from_digits(d) * (10 ** len(d) + 1)`` in value.

    Raises:
        ValueError: if ``d`` is the single digit 0 (the doubled form
        would start with a leading zero).
    """
    if d.digits == (0,):
        raise ValueError("cannot repeat the zero block")
    return Digits(d.digits + d.digits)
