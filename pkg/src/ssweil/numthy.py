"""Elementary number theory: factoring, totients, orders, quadratic
characters and cyclotomic polynomials.

Inputs in this project stay below ~10^7, so trial division is plenty.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt

from .errors import EvenArgument, NotCoprime, NotPrime, OutOfRange
from .polyarith import IntegerPolynomial, poly_divexact, poly_mul

Factorization = list[tuple[int, int]]


def factorize(n: int) -> Factorization:
    """Prime factorization as ``[(prime, exponent), ...]``, primes increasing."""
    if n < 1:
        raise OutOfRange(f"factorize needs n >= 1, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            out.append((d, k))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return p


def omega(n: int) -> int:
    """Number of distinct prime factors."""
    return len(factorize(n))


def euler_phi(m: int) -> int:
    if m < 1:
        raise OutOfRange(f"euler_phi needs m >= 1, got {m}")
    result = m
    for p, _ in factorize(m):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def _inverse_phi(k: int) -> tuple[int, ...]:
    # Any prime p | m has (p - 1) | k, so build m one prime power at a
    # time, largest prime first, dividing k down to 1.
    primes = [d + 1 for d in divisors(k) if is_prime(d + 1)]
    found = []

    def build(rem: int, top: int, m: int) -> None:
        if rem == 1:
            found.append(m)
            if m % 2:
                found.append(2 * m)
        for j in range(top - 1, -1, -1):
            p = primes[j]
            if p == 2:
                # 2^1 contributes phi = 1 and is covered above
                r, pk = rem, 2
                while r % 2 == 0:
                    r //= 2
                    pk *= 2
                    build(r, j, m * pk)
                continue
            if rem % (p - 1):
                continue
            r, pk = rem // (p - 1), p
            while True:
                build(r, j, m * pk)
                if r % p:
                    break
                r //= p
                pk *= p

    build(k, len(primes), 1)
    return tuple(sorted(found))


def inverse_phi(k: int) -> list[int]:
    """All m with phi(m) == k, ascending (possibly empty)."""
    if k < 1:
        raise OutOfRange(f"inverse_phi needs k >= 1, got {k}")
    return list(_inverse_phi(k))


def multiplicative_order(p: int, m: int) -> int:
    """Least r >= 1 with p^r = 1 mod m; by convention 1 when m == 1."""
    if m < 1:
        raise OutOfRange(f"modulus must be >= 1, got {m}")
    if m == 1:
        return 1
    if gcd(p, m) != 1:
        raise NotCoprime(f"gcd({p}, {m}) > 1")
    r, x = 1, p % m
    while x != 1:
        x = x * p % m
        r += 1
    return r


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise NotPrime(f"legendre needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def _require_odd(a: int) -> None:
    if a % 2 == 0:
        raise EvenArgument(f"character defined on odd integers only, got {a}")


def char_eps(a: int) -> int:
    """+1 if a = 1 mod 4, -1 if a = 3 mod 4."""
    _require_odd(a)
    return 1 if a % 4 == 1 else -1


def char_two(a: int) -> int:
    """+1 on a = +-1 mod 8, -1 on a = +-3 mod 8."""
    _require_odd(a)
    return 1 if a % 8 in (1, 7) else -1


def char_minus_two(a: int) -> int:
    """+1 on a = 1, 3 mod 8, -1 on a = 5, 7 mod 8."""
    _require_odd(a)
    return 1 if a % 8 in (1, 3) else -1


def p_star(p: int) -> int:
    if p == 2 or not is_prime(p):
        raise NotPrime(f"p_star needs an odd prime, got {p}")
    return p if p % 4 == 1 else -p


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> IntegerPolynomial:
    prod = IntegerPolynomial((1,))
    for d in divisors(m)[:-1]:
        prod = poly_mul(prod, _cyclotomic(d))
    xm1 = IntegerPolynomial((-1,) + (0,) * (m - 1) + (1,))
    return poly_divexact(xm1, prod)


def cyclotomic(m: int) -> IntegerPolynomial:
    """The m-th cyclotomic polynomial."""
    if m < 1:
        raise OutOfRange(f"cyclotomic needs m >= 1, got {m}")
    return _cyclotomic(m)
