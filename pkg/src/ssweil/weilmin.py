"""Scaling f -> f^[sqrt(s)] and minimal polynomials of supersingular Weil numbers.

For odd exponent the Weil number is written theta = sqrt(q') * zeta_{4t}
with the signed q' = +-p^n; for even exponent it is sqrt(q) * zeta_m with
sqrt(q) an integer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

from .errors import BadArguments, NonIntegralScaling
from .numthy import cyclotomic, require_prime
from .polyarith import IntegerPolynomial, is_even_polynomial
from .psipoly import QuadraticPolynomial, psi, psi_negate, psi_two


class CaseTag(str, enum.Enum):
    NORMAL = "Normal"
    EXC_ODD_P = "ExcOddP"
    EXC_TWO_PLUS = "ExcTwoPlus"
    EXC_TWO_MINUS = "ExcTwoMinus"
    REAL_ODD = "RealOdd"
    EVEN_CYCLOTOMIC = "EvenCyclotomic"
    EVEN_REAL = "EvenReal"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FieldParameters:
    """F_q with q = p^n; ``sign`` selects q' = sign * p^n (odd n only)."""

    p: int
    n: int
    sign: int = 1

    def __post_init__(self):
        require_prime(self.p)
        if self.n < 1:
            raise BadArguments(f"exponent must be >= 1, got {self.n}")
        if self.sign not in (1, -1):
            raise BadArguments(f"sign must be +1 or -1, got {self.sign}")
        if self.sign == -1 and self.n % 2 == 0:
            raise BadArguments("signed q' only makes sense for odd n")

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def signed_q(self) -> int:
        return self.sign * self.q

    @property
    def sqrt_q(self) -> int:
        if self.n % 2:
            raise NonIntegralScaling(f"sqrt({self.q}) is irrational")
        return self.p ** (self.n // 2)


def _square_root(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def scale_sqrt(f: IntegerPolynomial, s: int) -> IntegerPolynomial:
    """f^[sqrt(s)]: the coefficient of X^j picks up s^((deg f - j)/2)."""
    if s == 0:
        raise NonIntegralScaling("scaling by zero")
    d = f.degree
    root = _square_root(s)
    if root is not None:
        return IntegerPolynomial(tuple(c * root ** (d - j) for j, c in enumerate(f.coeffs)))
    if d % 2 or not is_even_polynomial(f):
        raise NonIntegralScaling(f"sqrt({s}) scaling of an odd-support polynomial is not integral")
    return IntegerPolynomial(tuple(c * s ** ((d - j) // 2) if c else 0 for j, c in enumerate(f.coeffs)))


def scale_quad(psi_: QuadraticPolynomial, s: int) -> IntegerPolynomial:
    """psi^[sqrt(s)] for psi over Z[sqrt(d)] with d*s a positive square.

    Odd-j coefficients use the positive root of d*s; the other branch is
    the opposite sign variant.
    """
    if not psi_.has_parity_structure() or psi_.degree % 2:
        raise NonIntegralScaling("psi lacks the even/odd coefficient structure")
    root = _square_root(psi_.radicand * s)
    if root is None:
        raise NonIntegralScaling(f"{psi_.radicand}*{s} is not a positive square")
    deg = psi_.degree
    out = []
    for j in range(deg + 1):
        if j % 2 == 0:
            out.append(psi_.rat[j] * s ** ((deg - j) // 2))
        else:
            out.append(psi_.rad[j] * s ** ((deg - j - 1) // 2) * root)
    return IntegerPolynomial(tuple(out))


def classify_odd(qs: int, p: int, t: int) -> CaseTag:
    """Which clause of the odd-exponent classification governs sqrt(q') zeta_{4t}."""
    if qs % 2:
        if t % 2 == 0 or t % p or qs % 4 == 1:
            return CaseTag.NORMAL
        return CaseTag.EXC_ODD_P
    if t % 4 != 2:
        return CaseTag.NORMAL
    return CaseTag.EXC_TWO_PLUS if qs > 0 else CaseTag.EXC_TWO_MINUS


def minimal_poly_odd(fp: FieldParameters, t: int) -> tuple[CaseTag, list[IntegerPolynomial]]:
    """Minimal polynomial(s) of sqrt(q') zeta_{4t}, odd exponent.

    Exceptional cases return both sign variants (Psi and Psi(-X) scaled),
    which are the minimal polynomials of the two Galois orbits.
    """
    if fp.n % 2 == 0:
        raise BadArguments("minimal_poly_odd needs an odd exponent")
    if t < 1:
        raise BadArguments(f"t must be >= 1, got {t}")
    qs, p = fp.signed_q, fp.p
    tag = classify_odd(qs, p, t)
    if tag is CaseTag.NORMAL:
        return tag, [scale_sqrt(cyclotomic(4 * t), qs)]
    if tag is CaseTag.EXC_ODD_P:
        base, s = psi(p, t // p), -qs
    elif tag is CaseTag.EXC_TWO_PLUS:
        base, s = psi_two(t // 2, 1), qs
    else:
        base, s = psi_two(t // 2, -1), qs
    return tag, [scale_quad(base, s), scale_quad(psi_negate(base), s)]


def minimal_poly_even(fp: FieldParameters, m: int) -> IntegerPolynomial:
    """Phi_m^[sqrt(q)] for even exponent."""
    if fp.n % 2:
        raise BadArguments("minimal_poly_even needs an even exponent")
    return scale_sqrt(cyclotomic(m), fp.sqrt_q**2)
