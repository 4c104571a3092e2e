"""Independent checks on Weil polynomials.

Nothing here calls into the classification code: supersingularity is
tested by exact divisibility, the brute-force search scans coefficient
boxes, and the numeric check finds roots from scratch.
"""

from __future__ import annotations

import cmath
import random
from math import comb, isqrt, lcm

from .errors import NoConvergence, OddDegree, OutOfRange, UnsupportedDegree
from .numthy import euler_phi
from .polyarith import IntegerPolynomial, poly_mul, poly_powmod, powmod_list

# Mersenne prime used to screen divisibility cheaply before exact checks.
_SCREEN_PRIME = (1 << 61) - 1


def is_weil_structured(P: IntegerPolynomial, q: int) -> bool:
    """Coefficient symmetry c_i = q^(g-i) c_(2g-i) of a degree-2g Weil polynomial."""
    d = P.degree
    if d < 0 or d % 2:
        raise OddDegree(f"degree {d} is not even")
    if not P.is_monic():
        return False
    g = d // 2
    return all(P[i] == q ** (g - i) * P[d - i] for i in range(g + 1))


def max_root_order(k: int) -> int:
    """Largest m with phi(m) <= k (phi(m) >= sqrt(m/2) bounds the search)."""
    return max(m for m in range(1, 2 * k * k + 2) if euler_phi(m) <= k)


def _lcm_upto(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out = lcm(out, i)
    return out


def _xpow_minus_qpow(N: int, q: int, P: IntegerPolynomial, ell: int | None) -> list[int]:
    """(X^(2N) - q^N) mod P as a coefficient list."""
    r = powmod_list([0, 1], 2 * N, P, ell)
    r = r + [0] * max(0, P.degree - len(r))
    qn = pow(q, N, ell) if ell else q**N
    if r:
        r[0] -= qn
    else:
        r = [-qn]
    if ell:
        r = [x % ell for x in r]
    return r


def _vanishes_to_power(rem: list[int], k: int, P: IntegerPolynomial, ell: int | None) -> bool:
    """Is rem^k = 0 mod P (mod ell if given)?"""
    acc = powmod_list(rem, k, P, ell)
    return not any(acc)


def is_supersingular_exact(P: IntegerPolynomial, q: int, N_max: int | None = None) -> int | None:
    """Least N <= N_max with P | X^(2N) - q^N, or None.

    Every root of P is then sqrt(q) times a root of unity.  A root of unity
    of order m in a root of P has phi(m) <= 2 deg P, so N never needs to
    exceed M = max{m : phi(m) <= 2 deg P}; a failed screen at
    L = lcm(1..M) therefore proves no N works at all.
    """
    if P.degree < 1 or not P.is_monic():
        raise OutOfRange("P must be monic and nonconstant")
    M = max_root_order(2 * P.degree)
    if N_max is None:
        N_max = 2 * M * M
    L = _lcm_upto(M)
    if not _vanishes_to_power(_xpow_minus_qpow(L, q, P, _SCREEN_PRIME), 1, P, _SCREEN_PRIME):
        return None
    # Irreducible P is settled by N <= M; a reducible P mixing root orders
    # can need more, and then N divides L.
    tail = (N for N in range(M + 1, N_max + 1) if L % N == 0)
    for N in (*range(1, min(N_max, M) + 1), *tail):
        if poly_powmod(2 * N, P) == IntegerPolynomial((q**N,)):
            return N
    return None


def has_supersingular_roots(P: IntegerPolynomial, q: int) -> bool:
    """Like :func:`is_supersingular_exact` but allows repeated roots.

    Tests P | (X^(2N) - q^N)^deg P, which holds for some N exactly when
    every root (with any multiplicity) is a supersingular Weil number.
    """
    if P.degree < 1 or not P.is_monic():
        raise OutOfRange("P must be monic and nonconstant")
    M = max_root_order(2 * P.degree)
    k = P.degree
    screen = _xpow_minus_qpow(_lcm_upto(M), q, P, _SCREEN_PRIME)
    if not _vanishes_to_power(screen, k, P, _SCREEN_PRIME):
        return False
    return any(_vanishes_to_power(_xpow_minus_qpow(N, q, P, None), k, P, None) for N in range(1, M + 1))


def _coefficient_bound(g: int, i: int, q: int) -> int:
    # |a_i| <= C(2g, i) q^(i/2)
    return isqrt(comb(2 * g, i) ** 2 * q**i)


def brute_force_weil(q: int, g: int) -> list[IntegerPolynomial]:
    """Every monic degree-2g polynomial with all roots supersingular Weil
    q-numbers (reducible ones included), sorted by coefficients.

    Scans both functional equations c_i = +-q^(g-i) c_(2g-i); the minus
    sign covers factors such as X^2 - q with real roots.
    """
    if g not in (1, 2):
        raise UnsupportedDegree(f"brute force supports g in {{1, 2}}, got {g}")
    b1 = _coefficient_bound(g, 1, q)
    if g == 1:
        grid = [(q, a, 1) for a in range(-b1, b1 + 1)] + [(-q, 0, 1)]
    else:
        b2 = _coefficient_bound(g, 2, q)
        grid = [(q * q, q * a, b, a, 1) for a in range(-b1, b1 + 1) for b in range(-b2, b2 + 1)]
        grid += [(-q * q, -q * a, 0, a, 1) for a in range(-b1, b1 + 1)]
    out = [P for P in map(IntegerPolynomial, grid) if has_supersingular_roots(P, q)]
    return sorted(out, key=lambda f: f.coeffs)


def irreducible_members(
    polys: list[IntegerPolynomial], lower: list[IntegerPolynomial], keep_squares: bool = False
) -> list[IntegerPolynomial]:
    """Drop members that factor as a product of two polynomials from ``lower``.

    ``lower`` holds every candidate factor of half the degree; linear
    factors X -+ sqrt(q) should be included by the caller when relevant.
    With ``keep_squares`` a perfect square f^2 survives, since that is how
    a class with multiplicity 2 shows up.
    """
    products = set()
    for i, f in enumerate(lower):
        for h in lower[i + keep_squares:]:
            products.add(poly_mul(f, h).coeffs)
    return [P for P in polys if P.coeffs not in products]


def durand_kerner(P: IntegerPolynomial, tol: float = 1e-14, max_iter: int = 5000, seed: int = 0) -> list[complex]:
    """All complex roots of P by simultaneous (Weierstrass) iteration.

    The polynomial is rescaled to unit root radius first; starting points
    sit on a slightly perturbed circle.
    """
    d = P.degree
    if d < 1:
        raise OutOfRange("constant polynomial has no roots")
    lead = P.leading()
    radius = abs(P[0] / lead) ** (1.0 / d) if P[0] else 1.0
    radius = radius or 1.0
    # monic in Y = X / radius
    c = [P[j] / lead / radius ** (d - j) for j in range(d + 1)]

    def f(z):
        acc = 0j
        for a in reversed(c):
            acc = acc * z + a
        return acc

    rng = random.Random(seed)
    z = [cmath.exp(2j * cmath.pi * (k + 0.25 + 0.1 * rng.random()) / d) * (1 + 0.01 * rng.random()) for k in range(d)]
    for _ in range(max_iter):
        delta = 0.0
        for i in range(d):
            denom = 1 + 0j
            for j in range(d):
                if j != i:
                    denom *= z[i] - z[j]
            if denom == 0:
                denom = 1e-300
            step = f(z[i]) / denom
            z[i] -= step
            delta = max(delta, abs(step))
        if delta < tol:
            break
    else:
        # repeated roots converge only linearly; accept if residuals are tiny
        def rel(w):
            scale = sum(abs(a) * abs(w) ** k for k, a in enumerate(c))
            return abs(f(w)) / scale

        if max(rel(w) for w in z) > 1e-10:
            raise NoConvergence(f"no convergence after {max_iter} iterations")
    return [w * radius for w in z]


def root_modulus_check(P: IntegerPolynomial, q: int, tol: float) -> bool:
    """Every complex root z satisfies | |z| - sqrt(q) | < tol * sqrt(q)."""
    if P.degree < 1:
        raise OutOfRange("P must be nonconstant")
    s = q**0.5
    return all(abs(abs(z) - s) < tol * s for z in durand_kerner(P))
