"""Exact arithmetic in Z[zeta_N], elements stored as residues modulo Phi_N.

The canonical generator zeta_N is the residue class of X.  The square
roots used elsewhere are *defined* as fixed elements here:

    sqrt(p*) := sum_a (a/p) zeta_p^a        (level p)
    sqrt(2)  := zeta_8 + zeta_8^-1          (level 8)
    sqrt(-2) := zeta_8 + zeta_8^3           (level 8)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import LevelMismatch, NotDivisible, NotInQuadraticSubring, OutOfRange
from .numthy import cyclotomic, legendre, require_prime
from .polyarith import IntegerPolynomial, poly_mul, poly_rem


def _reduce(level: int, rep: IntegerPolynomial) -> IntegerPolynomial:
    phi = cyclotomic(level)
    if rep.degree < phi.degree:
        return rep
    return poly_rem(rep, phi)


@dataclass(frozen=True)
class CyclotomicElement:
    level: int
    rep: IntegerPolynomial

    def __post_init__(self):
        if self.level < 1:
            raise OutOfRange(f"level must be >= 1, got {self.level}")
        object.__setattr__(self, "rep", _reduce(self.level, self.rep))

    @classmethod
    def integer(cls, level: int, c: int) -> CyclotomicElement:
        return cls(level, IntegerPolynomial((c,)))

    def is_rational(self) -> bool:
        return self.rep.degree <= 0

    def as_int(self) -> int:
        if not self.is_rational():
            raise NotInQuadraticSubring(f"{self} is not a rational integer")
        return self.rep[0]

    def __add__(self, other):
        return cf_add(self, other)

    def __sub__(self, other):
        return cf_add(self, cf_neg(other))

    def __neg__(self):
        return cf_neg(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicElement(self.level, other * self.rep)
        return cf_mul(self, other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"[{self.rep.__str__().replace('X', 'z')} @ level {self.level}]"


def _same_level(a: CyclotomicElement, b: CyclotomicElement) -> None:
    if a.level != b.level:
        raise LevelMismatch(f"levels {a.level} and {b.level} differ")


def zeta_power(N: int, k: int) -> CyclotomicElement:
    """zeta_N^k; k is reduced mod N, negative k allowed."""
    if N < 1:
        raise OutOfRange(f"level must be >= 1, got {N}")
    return CyclotomicElement(N, IntegerPolynomial.monomial(k % N))


def cf_add(a: CyclotomicElement, b: CyclotomicElement) -> CyclotomicElement:
    _same_level(a, b)
    return CyclotomicElement(a.level, a.rep + b.rep)


def cf_neg(a: CyclotomicElement) -> CyclotomicElement:
    return CyclotomicElement(a.level, -a.rep)


def cf_mul(a: CyclotomicElement, b: CyclotomicElement) -> CyclotomicElement:
    _same_level(a, b)
    return CyclotomicElement(a.level, poly_mul(a.rep, b.rep))


def embed(a: CyclotomicElement, M: int) -> CyclotomicElement:
    """Same number at level M via zeta_N -> zeta_M^(M/N)."""
    if M < 1 or M % a.level:
        raise NotDivisible(f"level {a.level} does not divide {M}")
    step = M // a.level
    coeffs = [0] * (step * max(a.rep.degree, 0) + 1)
    for i, c in enumerate(a.rep.coeffs):
        coeffs[i * step] = c
    return CyclotomicElement(M, IntegerPolynomial(coeffs))


def from_group_ring(N: int, vec: Sequence[int]) -> CyclotomicElement:
    """Image of sum_k vec[k] * g^k from Z[C_N] under g -> zeta_N."""
    if len(vec) != N:
        raise OutOfRange(f"group ring vector must have length {N}")
    return CyclotomicElement(N, IntegerPolynomial(vec))


def gauss_sum(p: int) -> CyclotomicElement:
    """sum_{a=1}^{p-1} (a/p) zeta_p^a, whose square is p*."""
    require_prime(p)
    if p == 2:
        raise OutOfRange("gauss_sum needs an odd prime")
    coeffs = [0] + [legendre(a, p) for a in range(1, p)]
    return CyclotomicElement(p, IntegerPolynomial(coeffs))


def sqrt_two_elem() -> CyclotomicElement:
    return cf_add(zeta_power(8, 1), zeta_power(8, -1))


def sqrt_minus_two_elem() -> CyclotomicElement:
    return cf_add(zeta_power(8, 1), zeta_power(8, 3))


def descend_quadratic(a: CyclotomicElement, root: CyclotomicElement) -> tuple[int, int]:
    """Write ``a`` as ``rat + rad * root`` with integers rat, rad.

    ``root`` must square to a rational integer and be irrational.  Solved on
    two coordinates of the power basis, then verified on all of them.
    """
    _same_level(a, root)
    r = root.rep
    j = next((i for i in range(1, len(r.coeffs)) if r.coeffs[i] != 0), None)
    if j is None:
        raise NotInQuadraticSubring("root is rational")
    rad, rem = divmod(a.rep[j], r.coeffs[j])
    if rem:
        raise NotInQuadraticSubring(f"coordinate {j} is not an integer multiple of the root")
    rat = a.rep[0] - rad * r[0]
    if CyclotomicElement(a.level, rat + rad * r) != a:
        raise NotInQuadraticSubring(f"{a} does not lie in Z + Z*root")
    return rat, rad
