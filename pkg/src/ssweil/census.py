"""Counting isogeny classes and deciding which dimensions occur at all.

Counts always come from enumeration.  The two closed forms below are kept
only as comparison targets; see :func:`paper_count_even` and
:func:`paper_bound_odd`.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

from .errors import BadArguments, NotCoprime, NotPrime
from .htclassify import enumerate_classes
from .numthy import inverse_phi, is_prime, multiplicative_order, omega

log = logging.getLogger(__name__)


class Verdict(str, enum.Enum):
    EXISTS = "Exists"
    NOT_EXISTS = "NotExists"
    EVEN_ONLY = "ExistsEvenOnly-Unknown-Odd"

    def __str__(self) -> str:
        return self.value


def count(p: int, n: int, g: int) -> int:
    """G_{q,g}, the number of isogeny classes of simple supersingular g-folds over F_{p^n}."""
    return len(enumerate_classes(p, n, g))


def _A(m: int) -> int:
    return len(inverse_phi(m))


def paper_count_even(p: int, g: int) -> int:
    """EXPERIMENTAL closed form A(2g)(o(p,2g)+1) + A(g) o(p,g), taken literally.

    o(p, k) is ord_k(p) mod 2.  The order is taken modulo 2g and g rather than
    modulo each m with phi(m) = 2g, so this need not match :func:`count`.
    """
    if g < 2:
        raise BadArguments(f"formula needs g > 1, got {g}")
    o2g = multiplicative_order(p, 2 * g) % 2
    og = multiplicative_order(p, g) % 2
    return _A(2 * g) * (o2g + 1) + _A(g) * og


def paper_bound_odd(g: int) -> int:
    """((-1)^(g+1) + 1) A(2g) + 2 sum_{m in phi^-1(2g)} omega(m), as printed.

    The summation runs over the set phi^-1(2g); the leading factor kills the
    first term for even g.
    """
    if g < 3:
        raise BadArguments(f"bound needs g > 2, got {g}")
    ms = inverse_phi(2 * g)
    return ((-1) ** (g + 1) + 1) * len(ms) + 2 * sum(omega(m) for m in ms)


def _odd_witness(g: int) -> bool:
    """Some odd-exponent field carries a degree-2g supersingular Weil number.

    Normal case: phi(4t) = 2g.  Exceptional case: phi(4t) = 4g with t odd
    and > 1 (a prime p | t, q' = 3 mod 4) or t = 2 mod 4 (q' = +-2^n).
    """
    if any(m % 4 == 0 for m in inverse_phi(2 * g)):
        return True
    for m in inverse_phi(4 * g):
        if m % 4:
            continue
        t = m // 4
        if (t % 2 and t > 1) or t % 4 == 2:
            return True
    return False


def exists_dimension(g: int) -> Verdict:
    """What is proven about dimension g over all finite fields.

    NotExists when phi^-1(g) and phi^-1(2g) are both empty.  Otherwise some
    even-exponent field has a g-fold; the verdict is Exists when an odd
    exponent witness is also known, else the even-only verdict.
    """
    if g < 1:
        raise BadArguments(f"g must be >= 1, got {g}")
    if g <= 2:
        return Verdict.EXISTS
    if not inverse_phi(g) and not inverse_phi(2 * g):
        return Verdict.NOT_EXISTS
    return Verdict.EXISTS if _odd_witness(g) else Verdict.EVEN_ONLY


def gap_dimensions(max_g: int) -> list[int]:
    """All g in [3, max_g] with no simple supersingular g-fold over any F_q."""
    if max_g < 3:
        raise BadArguments(f"max_g must be >= 3, got {max_g}")
    return [g for g in range(3, max_g + 1) if exists_dimension(g) is Verdict.NOT_EXISTS]


def sophie_germain_gap(p: int) -> bool:
    """True iff 2p+1 is composite, in which case dimension p is a gap."""
    if p <= 2 or not is_prime(p):
        raise NotPrime(f"need an odd prime, got {p}")
    return not is_prime(2 * p + 1)


@dataclass(frozen=True)
class EvenComparison:
    p: int
    g: int
    formula: int | None  # None where the formula is inapplicable
    enumerated: int

    @property
    def agrees(self) -> bool:
        return self.formula == self.enumerated


@dataclass(frozen=True)
class OddComparison:
    p: int
    n: int
    g: int
    bound: int
    enumerated: int

    @property
    def holds(self) -> bool:
        return self.enumerated <= self.bound


def even_formula_table(primes: list[int], dims: list[int], n: int = 2) -> list[EvenComparison]:
    rows = []
    for p in primes:
        for g in dims:
            try:
                formula = paper_count_even(p, g)
            except (NotCoprime, BadArguments):
                formula = None
            rows.append(EvenComparison(p, g, formula, count(p, n, g)))
    return rows


def odd_bound_table(primes: list[int], dims: list[int], n: int = 1) -> list[OddComparison]:
    rows = []
    for p in primes:
        for g in dims:
            row = OddComparison(p, n, g, paper_bound_odd(g), count(p, n, g))
            if not row.holds:
                log.warning("odd bound violated: p=%d n=%d g=%d bound=%d count=%d", p, n, g, row.bound, row.enumerated)
            rows.append(row)
    return rows
