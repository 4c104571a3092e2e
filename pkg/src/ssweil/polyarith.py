"""Dense univariate polynomials over the integers.

A polynomial is stored as a tuple of Python ints in ascending order, so
``coeffs[i]`` is the coefficient of ``X**i``.  The zero polynomial is the
empty tuple.  Every constructor normalizes (strips trailing zeros), so two
equal polynomials always have equal ``coeffs``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DivisionByZero, InexactDivision, OutOfRange


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True, order=False)
class IntegerPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, c: int) -> IntegerPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntegerPolynomial:
        if k < 0:
            raise OutOfRange(f"negative exponent {k}")
        return cls((0,) * k + (c,))

    @classmethod
    def from_descending(cls, coeffs: Sequence[int]) -> IntegerPolynomial:
        return cls(tuple(reversed(list(coeffs))))

    @classmethod
    def from_strings(cls, coeffs: Sequence[str]) -> IntegerPolynomial:
        """Inverse of :meth:`to_strings`."""
        return cls(tuple(int(s) for s in coeffs))

    # -- basic queries ------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- operators ----------------------------------------------------
    def __add__(self, other):
        return poly_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return IntegerPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return poly_add(self, -_coerce(other))

    def __rsub__(self, other):
        return poly_add(_coerce(other), -self)

    def __mul__(self, other):
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return poly_pow(self, k)

    # -- serialization ------------------------------------------------
    def to_strings(self) -> list[str]:
        """Ascending coefficients as decimal strings (machine form)."""
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"IntegerPolynomial({render(self)!r})"


def _coerce(x) -> IntegerPolynomial:
    if isinstance(x, IntegerPolynomial):
        return x
    if isinstance(x, int):
        return IntegerPolynomial((x,))
    return NotImplemented


X = IntegerPolynomial((0, 1))
ONE = IntegerPolynomial((1,))
ZERO = IntegerPolynomial(())


def _term(c: int, k: int, var: str) -> str:
    a = abs(c)
    if k == 0:
        return str(a)
    mono = var if k == 1 else f"{var}^{k}"
    return mono if a == 1 else f"{a}*{mono}"


def render(f: IntegerPolynomial, var: str = "X") -> str:
    """Canonical text, descending powers: ``X^4 - 3*X^2 + 9``."""
    if f.is_zero():
        return "0"
    out = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if c == 0:
            continue
        t = _term(c, k, var)
        if not out:
            out.append(t if c > 0 else "-" + t)
        else:
            out.append(("+ " if c > 0 else "- ") + t)
    return " ".join(out)


def poly_add(f: IntegerPolynomial, g: IntegerPolynomial) -> IntegerPolynomial:
    a, b = f.coeffs, g.coeffs
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, c in enumerate(b):
        res[i] += c
    return IntegerPolynomial(res)


def poly_mul(f: IntegerPolynomial, g: IntegerPolynomial) -> IntegerPolynomial:
    a, b = f.coeffs, g.coeffs
    if not a or not b:
        return ZERO
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            res[i + j] += x * y
    return IntegerPolynomial(res)


def poly_scale(f: IntegerPolynomial, c: int) -> IntegerPolynomial:
    return IntegerPolynomial(tuple(c * x for x in f.coeffs))


def poly_pow(f: IntegerPolynomial, k: int) -> IntegerPolynomial:
    if k < 0:
        raise OutOfRange(f"negative power {k}")
    result, base = ONE, f
    while k:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


def poly_divmod(f: IntegerPolynomial, g: IntegerPolynomial) -> tuple[IntegerPolynomial, IntegerPolynomial]:
    """Synthetic long division over Z.

    Every step must divide the running leading coefficient exactly by the
    leading coefficient of ``g``; monic divisors always qualify.
    """
    if g.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    rem = list(f.coeffs)
    dg, lg = g.degree, g.leading()
    if len(rem) - 1 < dg:
        return ZERO, f
    quot = [0] * (len(rem) - dg)
    gc = g.coeffs
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        qc, r = divmod(c, lg)
        if r:
            raise InexactDivision(f"leading coefficient {c} not divisible by {lg}")
        quot[k - dg] = qc
        off = k - dg
        for j in range(dg + 1):
            rem[off + j] -= qc * gc[j]
    return IntegerPolynomial(quot), IntegerPolynomial(rem[:dg])


def poly_rem(f: IntegerPolynomial, g: IntegerPolynomial) -> IntegerPolynomial:
    return poly_divmod(f, g)[1]


def poly_divexact(f: IntegerPolynomial, g: IntegerPolynomial) -> IntegerPolynomial:
    q, r = poly_divmod(f, g)
    if not r.is_zero():
        raise InexactDivision(f"{render(g)} does not divide {render(f)}")
    return q


def poly_compose_power(f: IntegerPolynomial, k: int) -> IntegerPolynomial:
    """Return f(X^k)."""
    if k < 1:
        raise OutOfRange(f"substitution power must be >= 1, got {k}")
    if k == 1 or f.degree <= 0:
        return f
    res = [0] * (f.degree * k + 1)
    for i, c in enumerate(f.coeffs):
        res[i * k] = c
    return IntegerPolynomial(res)


def poly_negate_variable(f: IntegerPolynomial) -> IntegerPolynomial:
    """Return f(-X)."""
    return IntegerPolynomial(tuple(-c if i & 1 else c for i, c in enumerate(f.coeffs)))


def is_even_polynomial(f: IntegerPolynomial) -> bool:
    return all(c == 0 for c in f.coeffs[1::2])


# Modular helpers.  ``ell`` optionally reduces every coefficient modulo a
# prime; with ell=None everything is exact over Z.

def _rem_list(a: list[int], m: tuple[int, ...], ell: int | None) -> list[int]:
    dm = len(m) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k]
        if c:
            off = k - dm
            for j in range(dm):
                a[off + j] -= c * m[j]
            a[k] = 0
            if ell is not None:
                a[k - 1] %= ell
    del a[dm:]
    if ell is not None:
        a[:] = [x % ell for x in a]
    return a


def _mulmod_list(a: list[int], b: list[int], m: tuple[int, ...], ell: int | None) -> list[int]:
    if not a or not b:
        return []
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] += x * y
    if ell is not None:
        res = [x % ell for x in res]
    return _rem_list(res, m, ell)


def _check_monic_modulus(modulus: IntegerPolynomial) -> None:
    if modulus.degree < 1 or modulus.leading() != 1:
        raise OutOfRange("modulus must be monic of degree >= 1")


def poly_mulmod(f: IntegerPolynomial, g: IntegerPolynomial, modulus: IntegerPolynomial) -> IntegerPolynomial:
    _check_monic_modulus(modulus)
    a = _rem_list(list(f.coeffs), modulus.coeffs, None)
    b = _rem_list(list(g.coeffs), modulus.coeffs, None)
    return IntegerPolynomial(_mulmod_list(a, b, modulus.coeffs, None))


def powmod_list(base: list[int], exponent: int, modulus: IntegerPolynomial, ell: int | None = None) -> list[int]:
    """base**exponent mod modulus as a coefficient list (optionally mod ell)."""
    m = modulus.coeffs
    result = _rem_list([1], m, ell) if len(m) > 1 else []
    b = _rem_list(list(base), m, ell)
    e = exponent
    while e:
        if e & 1:
            result = _mulmod_list(result, b, m, ell)
        e >>= 1
        if e:
            b = _mulmod_list(b, b, m, ell)
    return result


def poly_powmod(base_exponent: int, modulus: IntegerPolynomial) -> IntegerPolynomial:
    """X**base_exponent reduced modulo a monic polynomial."""
    _check_monic_modulus(modulus)
    if base_exponent < 0:
        raise OutOfRange(f"negative exponent {base_exponent}")
    return IntegerPolynomial(powmod_list([0, 1], base_exponent, modulus))
