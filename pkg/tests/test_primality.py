"""Trial-division primality and the alternative characterizations."""

from arithlab.divisibility import gcd
from arithlab.intops import isqrt
from arithlab.primality import (
    characterization_below_sqrt,
    characterization_strict_divisors,
    is_prime,
)


def naive_is_prime(n: int) -> bool:
    """Full divisor scan, the most literal oracle."""
    return n > 1 and all(n % d != 0 for d in range(2, n))


def test_examples():
    assert is_prime(101).is_prime
    assert not is_prime(-7).is_prime
    assert not is_prime(1).is_prime
    assert not is_prime(0).is_prime
    verdict = is_prime(62744)
    assert not verdict.is_prime and verdict.smallest_factor == 2


def test_verdict_fields():
    assert is_prime(101).smallest_factor is None
    assert is_prime(-9).smallest_factor is None
    assert is_prime(15).smallest_factor == 3
    assert is_prime(2).is_prime and is_prime(3).is_prime


def test_agrees_with_naive_oracle():
    for n in range(-100, 3000):
        assert is_prime(n).is_prime == naive_is_prime(n), n


def test_characterization_examples():
    assert characterization_strict_divisors(7)
    assert not characterization_strict_divisors(9)
    assert characterization_strict_divisors(2)
    assert not characterization_strict_divisors(0)
    assert not characterization_below_sqrt(4)
    assert characterization_below_sqrt(3)  # isqrt(3) = 1: empty divisor range
    assert not characterization_below_sqrt(25)


def test_strict_divisors_matches_quantified_form():
    # the literal -p..p quantifier, affordable at small p
    for p in range(-20, 300):
        literal = p > 1 and all(
            p % a != 0 or a in (-1, 1, p, -p)
            for a in range(-abs(p), abs(p) + 1)
            if a != 0
        )
        assert characterization_strict_divisors(p) == literal, p


def test_three_characterizations_agree():
    for n in range(-50, 10**4 + 1):
        expected = is_prime(n).is_prime
        assert characterization_below_sqrt(n) == expected, n
        assert characterization_strict_divisors(n) == expected, n


def test_gcd_based_definition_agrees():
    for p in range(2, 2001):
        by_gcd = all(gcd(n, p) == 1 for n in range(1, p))
        assert is_prime(p).is_prime == by_gcd, p


def test_smallest_factor_minimal_prime_and_below_sqrt():
    for n in range(2, 10**4 + 1):
        verdict = is_prime(n)
        if verdict.smallest_factor is None:
            continue
        f = verdict.smallest_factor
        assert 1 < f <= isqrt(n)
        assert n % f == 0
        assert is_prime(f).is_prime
        assert all(n % d != 0 for d in range(2, f))
