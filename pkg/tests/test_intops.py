"""Division conventions, powers, integer square root, modular powers."""

from fractions import Fraction
import math

import pytest
from hypothesis import given, strategies as st

from arithlab.intops import (
    div_mod,
    floor_div,
    floor_mod,
    isqrt,
    mod_pow,
    parse_decimal,
    pow_nat,
    to_decimal,
)


def floor_oracle(a: int, b: int) -> int:
    """Rational floor, independent of // semantics."""
    return math.floor(Fraction(a, b))


@pytest.mark.parametrize(
    "a, b, expected",
    [(7, 2, 3), (-7, 2, -4), (5, 0, 0), (7, -2, -4), (-1, 3, -1)],
)
def test_floor_div_examples(a, b, expected):
    assert floor_div(a, b) == expected
    if b != 0:
        assert expected == floor_oracle(a, b)


@pytest.mark.parametrize(
    "a, b, expected",
    [(7, 2, 1), (7, -2, -1), (5, 0, 5), (-1, 3, 2)],
)
def test_floor_mod_examples(a, b, expected):
    assert floor_mod(a, b) == expected


@pytest.mark.parametrize(
    "a, b, quot, rem",
    [(62744, 31, 2024, 0), (0, 7, 0, 0), (-1, 3, -1, 2)],
)
def test_div_mod_examples(a, b, quot, rem):
    assert div_mod(a, b) == (quot, rem)


def test_division_identity_exhaustive():
    for a in range(-200, 201):
        for b in range(-200, 201):
            q, r = div_mod(a, b)
            assert a == b * q + r


def test_remainder_range_exhaustive():
    for a in range(-200, 201):
        for b in range(1, 51):
            assert 0 <= floor_mod(a, b) < b
        for b in range(-50, 0):
            assert b < floor_mod(a, b) <= 0


@given(st.integers(), st.integers().filter(lambda b: b != 0))
def test_floor_div_matches_rational_floor(a, b):
    assert floor_div(a, b) == floor_oracle(a, b)
    assert a == b * floor_div(a, b) + floor_mod(a, b)


def test_pow_nat():
    assert pow_nat(2, 10) == 1024
    assert pow_nat(123456789, 0) == 1
    assert pow_nat(0, 0) == 1
    assert pow_nat(-2, 3) == -8
    # repeated-multiplication oracle
    acc = 1
    for _ in range(3):
        acc *= 35
    assert pow_nat(35, 3) == acc == 42875
    with pytest.raises(ValueError):
        pow_nat(2, -1)


def test_isqrt():
    assert isqrt(0) == 0
    # brute force over candidates
    assert isqrt(101) == max(s for s in range(12) if s * s <= 101) == 10
    assert isqrt(10**8) == 10000 and 10000**2 == 10**8
    for n in range(10**4 + 1):
        s = isqrt(n)
        assert s * s <= n < (s + 1) * (s + 1)
    with pytest.raises(ValueError):
        isqrt(-1)


def test_mod_pow_examples():
    assert mod_pow(35, 228, 17) == 1
    assert mod_pow(84, 501, 17) == 16
    # the exact route agrees even on the large exponents
    assert mod_pow(35, 228, 17) == floor_mod(pow_nat(35, 228), 17)
    assert mod_pow(84, 501, 17) == floor_mod(pow_nat(84, 501), 17)
    assert mod_pow(9, 0, 7) == floor_mod(1, 7) == 1
    assert mod_pow(9, 0, -7) == floor_mod(1, -7)


def test_mod_pow_agreement_exhaustive():
    for a in range(-20, 21):
        for e in range(0, 13):
            for m in range(1, 31):
                assert mod_pow(a, e, m) == floor_mod(pow_nat(a, e), m)


def test_mod_pow_negative_modulus_agreement():
    for a in range(-10, 11):
        for e in range(0, 8):
            for m in range(-15, 0):
                assert mod_pow(a, e, m) == floor_mod(pow_nat(a, e), m)


def test_mod_pow_errors():
    with pytest.raises(ValueError):
        mod_pow(2, 3, 0)
    with pytest.raises(ValueError):
        mod_pow(2, -1, 5)


def test_huge_values_are_exact():
    # 84**501 is a ~963-digit number; exactness at >2000 bits
    big = pow_nat(84, 501)
    assert big > 2**2000
    assert floor_mod(pow_nat(35, 228) + big, 17) == 0


@given(st.integers())
def test_decimal_round_trip(n):
    assert parse_decimal(to_decimal(n)) == n


@pytest.mark.parametrize("text", ["007", "-0", "", "+5", "1 2", "0x1", "--3", "1.5"])
def test_parse_decimal_rejects_non_canonical(text):
    with pytest.raises(ValueError):
        parse_decimal(text)


@pytest.mark.parametrize("text, value", [("0", 0), ("-17", -17), ("62744", 62744)])
def test_parse_decimal_accepts_canonical(text, value):
    assert parse_decimal(text) == value
