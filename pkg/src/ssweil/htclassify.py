"""Isogeny classes of simple supersingular abelian varieties over F_q.

Each class is identified by its characteristic polynomial
``weil_poly ** e``; ``e`` is the order of the endomorphism algebra's class
in the Brauer group, always 1 or 2 here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import BadArguments
from .numthy import cyclotomic, inverse_phi, multiplicative_order, require_prime
from .polyarith import IntegerPolynomial, poly_pow
from .weilmin import CaseTag, FieldParameters, minimal_poly_even, minimal_poly_odd, scale_sqrt


@dataclass(frozen=True)
class IsogenyClassRecord:
    field: FieldParameters
    g: int
    case_tag: CaseTag
    param: int
    sign_variant: str | None
    weil_poly: IntegerPolynomial
    e: int
    char_poly: IntegerPolynomial = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "char_poly", poly_pow(self.weil_poly, self.e))

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def n(self) -> int:
        return self.field.n

    @property
    def q(self) -> int:
        return self.field.q

    def sort_key(self):
        return (self.weil_poly.degree, self.weil_poly.coeffs)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "q": str(self.q),
            "g": self.g,
            "case": str(self.case_tag),
            "param": self.param,
            "variant": self.sign_variant or "none",
            "weil_coeffs": self.weil_poly.to_strings(),
            "e": self.e,
            "char_coeffs": self.char_poly.to_strings(),
        }


def multiplicity_even(p: int, m: int) -> tuple[int, int]:
    """(r, e): r is the degree of each factor of Phi_m over Q_p.

    r = ord_m(p) when p does not divide m, otherwise f * (p^k - p^(k-1))
    for m = p^k s with f = ord_s(p).  e = 2 exactly when r is odd.
    """
    if m < 1:
        raise BadArguments(f"m must be >= 1, got {m}")
    k, s = 0, m
    while s % p == 0:
        s //= p
        k += 1
    if k == 0:
        r = multiplicative_order(p, m)
    else:
        r = multiplicative_order(p, s) * (p**k - p ** (k - 1))
    return r, (1 if r % 2 == 0 else 2)


def _finish(records: Iterable[IsogenyClassRecord]) -> list[IsogenyClassRecord]:
    """Deduplicate by weil_poly keeping the smallest witness, then sort."""
    best: dict[tuple[int, ...], IsogenyClassRecord] = {}
    for rec in records:
        key = rec.weil_poly.coeffs
        cur = best.get(key)
        if cur is None or _witness(rec) < _witness(cur):
            best[key] = rec
    return sorted(best.values(), key=IsogenyClassRecord.sort_key)


def _witness(rec: IsogenyClassRecord):
    # '+' sorts before '-'; variant A before B
    return (0 if rec.field.sign == 1 else 1, rec.param, rec.sign_variant or "")


def _check_args(p: int, n: int, g: int) -> None:
    require_prime(p)
    if n < 1:
        raise BadArguments(f"exponent n must be >= 1, got {n}")
    if g < 1:
        raise BadArguments(f"dimension g must be >= 1, got {g}")


def enumerate_even(p: int, n: int, g: int) -> list[IsogenyClassRecord]:
    _check_args(p, n, g)
    if n % 2:
        raise BadArguments("enumerate_even needs an even exponent")
    fp = FieldParameters(p, n)
    out = []
    for want_e, k in ((1, 2 * g), (2, g)):
        for m in inverse_phi(k):
            if multiplicity_even(p, m)[1] != want_e:
                continue
            tag = CaseTag.EVEN_REAL if m <= 2 else CaseTag.EVEN_CYCLOTOMIC
            out.append(IsogenyClassRecord(fp, g, tag, m, None, minimal_poly_even(fp, m), want_e))
    return _finish(out)


def _t_candidates(k: int) -> list[int]:
    return [m // 4 for m in inverse_phi(k) if m % 4 == 0]


def enumerate_odd(p: int, n: int, g: int) -> list[IsogenyClassRecord]:
    _check_args(p, n, g)
    if n % 2 == 0:
        raise BadArguments("enumerate_odd needs an odd exponent")
    out = []
    q = p**n
    real = scale_sqrt(cyclotomic(4), -q)  # X^2 - q, the only real-rooted case
    for sign in (1, -1):
        fp = FieldParameters(p, n, sign)
        for t in sorted(set(_t_candidates(2 * g)) | set(_t_candidates(4 * g))):
            tag, polys = minimal_poly_odd(fp, t)
            for variant, poly in zip("AB", polys):
                if poly.degree != 2 * g or poly == real:
                    continue
                out.append(IsogenyClassRecord(fp, g, tag, t, variant if len(polys) > 1 else None, poly, 1))
    if g == 2:
        out.append(IsogenyClassRecord(FieldParameters(p, n, -1), 2, CaseTag.REAL_ODD, 1, None, real, 2))
    return _finish(out)


def enumerate_classes(p: int, n: int, g: int) -> list[IsogenyClassRecord]:
    """All isogeny classes of simple supersingular g-dimensional varieties over F_{p^n}."""
    _check_args(p, n, g)
    return enumerate_odd(p, n, g) if n % 2 else enumerate_even(p, n, g)


def degree_identity_holds(rec: IsogenyClassRecord) -> bool:
    return rec.weil_poly.degree * rec.e == 2 * rec.g
