"""Divisibility relation, gcd/Bezout, divisor enumeration, find_all."""

import pytest
from hypothesis import given, strategies as st

from arithlab.divisibility import (
    BezoutCert,
    DividesWitness,
    divides,
    ext_gcd,
    find_all,
    gcd,
    positive_divisors,
)
from arithlab.intops import floor_mod


def gcd_oracle(a: int, b: int) -> int:
    """Largest common divisor by brute force."""
    a, b = abs(a), abs(b)
    if a == 0 and b == 0:
        return 0
    bound = max(a, b)
    return max(d for d in range(1, bound + 1) if a % d == 0 and b % d == 0)


def test_divides_examples():
    assert divides(31, 62744) == DividesWitness(31, 62744, 2024)
    assert divides(0, 0) == DividesWitness(0, 0, 0)
    assert divides(7, 13) is None
    assert divides(0, 5) is None
    assert divides(-3, 6) == DividesWitness(-3, 6, -2)


def test_witness_soundness_exhaustive():
    for b in range(-500, 501):
        for a in range(-500, 501):
            w = divides(b, a)
            if w is not None:
                assert w.dividend == w.divisor * w.cofactor
                assert (w.divisor, w.dividend) == (b, a)


def test_mod_bridge_exhaustive():
    for a in range(-200, 201):
        for b in range(-50, 51):
            if b == 0:
                continue
            assert (divides(b, a) is not None) == (floor_mod(a, b) == 0)


def test_partial_order_on_positives():
    rel = {
        (a, b)
        for a in range(1, 101)
        for b in range(1, 101)
        if divides(a, b) is not None
    }
    for n in range(1, 101):
        assert (n, n) in rel
    for a, b in rel:
        for c in range(1, 101):
            if (b, c) in rel:
                assert (a, c) in rel
    for a, b in rel:
        if (b, a) in rel:
            assert a == b
    # a non-total order: both divide 6 yet are incomparable
    assert (2, 6) in rel and (3, 6) in rel
    assert (2, 3) not in rel and (3, 2) not in rel


@given(
    st.integers(-100, 100),
    st.integers(-100, 100),
    st.integers(-100, 100),
    st.integers(-100, 100),
)
def test_compatibility(b, q1, q2, c):
    a1, a2 = b * q1, b * q2
    assert divides(b, a1 + a2) is not None
    assert divides(b, a1 * c) is not None


def test_gauss_lemma():
    for a in range(1, 61):
        for b in range(1, 61):
            if gcd(a, b) != 1:
                continue
            for c in range(1, 61):
                if divides(a, b * c) is not None:
                    assert divides(a, c) is not None


def test_gcd_examples():
    assert gcd(62744, 31) == 31 == gcd_oracle(62744, 31)
    assert gcd(0, -5) == 5
    assert gcd(0, 0) == 0
    assert gcd(12, -18) == 6 == gcd_oracle(12, -18)


@given(st.integers(-300, 300), st.integers(-300, 300))
def test_gcd_matches_oracle(a, b):
    assert gcd(a, b) == gcd_oracle(a, b)


def _assert_valid_cert(cert: BezoutCert):
    assert cert.g == cert.u * cert.a + cert.v * cert.b
    assert cert.g >= 0
    assert cert.g == gcd(cert.a, cert.b)
    if cert.g != 0:
        assert cert.a % cert.g == 0 and cert.b % cert.g == 0


def test_ext_gcd_examples():
    assert ext_gcd(1, 0) == BezoutCert(1, 0, 1, 1, 0)
    cert = ext_gcd(12, 18)
    assert (cert.a, cert.b, cert.g) == (12, 18, 6)
    assert 12 * cert.u + 18 * cert.v == 6
    zero = ext_gcd(0, 0)
    assert (zero.a, zero.b, zero.g) == (0, 0, 0)
    _assert_valid_cert(zero)


def test_ext_gcd_exhaustive():
    for a in range(-100, 101):
        for b in range(-100, 101):
            _assert_valid_cert(ext_gcd(a, b))


def test_positive_divisors():
    assert positive_divisors(8) == [1, 2, 4, 8]
    assert positive_divisors(1) == [1]
    assert positive_divisors(-6) == [1, 2, 3, 6]
    for n in list(range(1, 501)) + [-360, -97]:
        assert positive_divisors(n) == [
            d for d in range(1, abs(n) + 1) if abs(n) % d == 0
        ]
    with pytest.raises(ValueError):
        positive_divisors(0)


def test_find_all():
    assert find_all(lambda n: n >= 0 and divides(n, n + 8) is not None, 0, 10000) == [
        1,
        2,
        4,
        8,
    ]
    assert find_all(lambda n: False, 0, 10) == []
    assert find_all(lambda n: n % 2 == 0, 1, 7) == [2, 4, 6]
    with pytest.raises(ValueError):
        find_all(lambda n: True, 3, 2)


def test_find_all_dual_obligation():
    pred = lambda n: n * n % 5 == 1
    result = find_all(pred, -30, 30)
    assert all(pred(x) for x in result)
    assert result == [x for x in range(-30, 31) if pred(x)]
    assert result == sorted(set(result))


def test_six_divides_iff_two_and_three():
    for n in range(-300, 301):
        six = divides(6, n) is not None
        both = divides(2, n) is not None and divides(3, n) is not None
        assert six == both
