from __future__ import annotations

from math import gcd, prod

import pytest
from hypothesis import given, strategies as st

from ssweil.errors import EvenArgument, NotCoprime, NotPrime, OutOfRange
from ssweil.numthy import (
    char_eps,
    char_minus_two,
    char_two,
    cyclotomic,
    divisors,
    euler_phi,
    factorize,
    inverse_phi,
    is_prime,
    legendre,
    multiplicative_order,
    p_star,
)
from ssweil.polyarith import IntegerPolynomial, poly_mul


def brute_phi(m):
    return sum(1 for a in range(1, m + 1) if gcd(a, m) == 1)


def test_factorize_examples():
    assert factorize(1) == []
    assert factorize(12) == [(2, 2), (3, 1)]
    assert factorize(44) == [(2, 2), (11, 1)]
    with pytest.raises(OutOfRange):
        factorize(0)


@given(st.integers(1, 10**6))
def test_factorize_reconstructs(n):
    f = factorize(n)
    assert prod(p**k for p, k in f) == n
    assert all(is_prime(p) for p, _ in f)


def test_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(44) == 20
    assert euler_phi(36) == 12


@given(st.integers(1, 2000))
def test_phi_matches_count(m):
    assert euler_phi(m) == brute_phi(m)


def test_inverse_phi_examples():
    assert inverse_phi(14) == []
    assert inverse_phi(2) == [3, 4, 6]
    assert inverse_phi(4) == [5, 8, 10, 12]
    assert inverse_phi(1) == [1, 2]
    assert inverse_phi(54) == [81, 162]


def test_inverse_phi_matches_exhaustive_scan():
    # phi(m) >= sqrt(m/2), so every preimage of k <= K lies below 2K^2 + 2
    K = 120
    table: dict[int, list[int]] = {}
    for m in range(1, 2 * K * K + 2):
        v = euler_phi(m)
        if v <= K:
            table.setdefault(v, []).append(m)
    for k in range(1, K + 1):
        assert inverse_phi(k) == table.get(k, []), k


def test_inverse_phi_odd_values_empty():
    assert all(inverse_phi(k) == [] for k in range(3, 200, 2))


def test_multiplicative_order_examples():
    assert multiplicative_order(2, 3) == 2
    assert multiplicative_order(7, 3) == 1
    assert multiplicative_order(12345, 1) == 1
    with pytest.raises(NotCoprime):
        multiplicative_order(2, 14)


@given(st.integers(2, 200), st.integers(1, 200))
def test_order_is_least_exponent(p, m):
    if gcd(p, m) != 1:
        return
    r = multiplicative_order(p, m)
    assert pow(p, r, m) == 1 % m
    assert all(pow(p, k, m) != 1 % m for k in range(1, r))


def test_legendre_examples():
    assert legendre(1, 5) == 1
    assert legendre(2, 5) == -1
    assert legendre(5, 5) == 0
    with pytest.raises(NotPrime):
        legendre(3, 2)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23])
def test_legendre_against_squares(p):
    squares = {a * a % p for a in range(1, p)}
    for a in range(-30, 30):
        expect = 0 if a % p == 0 else (1 if a % p in squares else -1)
        assert legendre(a, p) == expect


def test_characters():
    assert char_eps(5) == 1 and char_eps(3) == -1
    assert char_two(3) == -1 and [char_two(a) for a in (1, 7, -1, 5)] == [1, 1, 1, -1]
    assert char_minus_two(7) == -1 and [char_minus_two(a) for a in (1, 3, 5, -1)] == [1, 1, -1, -1]
    for f in (char_eps, char_two, char_minus_two):
        with pytest.raises(EvenArgument):
            f(4)


@given(st.integers(-500, 500).map(lambda k: 2 * k + 1), st.integers(-500, 500).map(lambda k: 2 * k + 1))
def test_characters_multiplicative(a, b):
    for f in (char_eps, char_two, char_minus_two):
        assert f(a * b) == f(a) * f(b)
    assert char_minus_two(a) == char_eps(a) * char_two(a)


def test_p_star():
    assert p_star(5) == 5 and p_star(3) == -3 and p_star(13) == 13
    with pytest.raises(NotPrime):
        p_star(2)


def test_cyclotomic_examples():
    assert cyclotomic(4) == IntegerPolynomial((1, 0, 1))
    assert cyclotomic(12) == IntegerPolynomial((1, 0, -1, 0, 1))
    assert cyclotomic(20) == IntegerPolynomial((1, 0, -1, 0, 1, 0, -1, 0, 1))


@pytest.mark.parametrize("n", list(range(1, 201)))
def test_cyclotomic_product_is_xn_minus_1(n):
    f = IntegerPolynomial((1,))
    for d in divisors(n):
        f = poly_mul(f, cyclotomic(d))
    assert f == IntegerPolynomial((-1,) + (0,) * (n - 1) + (1,))
    assert cyclotomic(n).degree == euler_phi(n)


def test_cyclotomic_even_support_when_4_divides():
    for m in range(4, 201, 4):
        assert all(c == 0 for c in cyclotomic(m).coeffs[1::2])
