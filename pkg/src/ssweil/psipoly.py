"""Half-cyclotomic polynomials Psi_{p,t}, Psi_{2,t}, Psi_{-2,t}.

Each Psi is built as the literal product of its linear factors with
coefficients in Z[zeta_N], then every coefficient is descended to
``rat + rad*sqrt(d)``.  The recursions are kept as independent checks
(see :func:`recursion_cofactor_sign`), never as the construction path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .cyclofield import descend_quadratic, embed, from_group_ring, gauss_sum, sqrt_minus_two_elem, sqrt_two_elem
from .errors import BadArguments, NotInQuadraticSubring
from .numthy import char_minus_two, char_two, is_prime, legendre, p_star
from .polyarith import IntegerPolynomial


@dataclass(frozen=True)
class QuadraticPolynomial:
    """Polynomial over Z[sqrt(d)]: coefficient of X^j is rat[j] + rad[j]*sqrt(d).

    Psi polynomials additionally have ``rad`` supported on odd j and ``rat``
    on even j; arithmetic here does not assume that.
    """

    radicand: int
    rat: tuple[int, ...]
    rad: tuple[int, ...]

    def __post_init__(self):
        n = max(len(self.rat), len(self.rad))
        rat = list(self.rat) + [0] * (n - len(self.rat))
        rad = list(self.rad) + [0] * (n - len(self.rad))
        while rat and rat[-1] == 0 and rad[-1] == 0:
            rat.pop()
            rad.pop()
        object.__setattr__(self, "rat", tuple(rat))
        object.__setattr__(self, "rad", tuple(rad))

    @property
    def degree(self) -> int:
        return len(self.rat) - 1

    def has_parity_structure(self) -> bool:
        return all(c == 0 for c in self.rat[1::2]) and all(c == 0 for c in self.rad[0::2])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.rad)

    def to_integer(self) -> IntegerPolynomial:
        if not self.is_rational():
            raise NotInQuadraticSubring("sqrt(d) part does not vanish")
        return IntegerPolynomial(self.rat)

    def __mul__(self, other: QuadraticPolynomial) -> QuadraticPolynomial:
        if self.radicand != other.radicand:
            raise BadArguments("radicands differ")
        d = self.radicand
        n = self.degree + other.degree + 1
        rat, rad = [0] * n, [0] * n
        for i, (a, b) in enumerate(zip(self.rat, self.rad)):
            for j, (c, e) in enumerate(zip(other.rat, other.rad)):
                rat[i + j] += a * c + d * b * e
                rad[i + j] += a * e + b * c
        return QuadraticPolynomial(d, tuple(rat), tuple(rad))

    def twist(self, sign: int) -> QuadraticPolynomial:
        """Return f(sign*X) for sign = +-1."""
        if sign == 1:
            return self
        flip = lambda seq: tuple(-c if j & 1 else c for j, c in enumerate(seq))
        return QuadraticPolynomial(self.radicand, flip(self.rat), flip(self.rad))

    def compose_power(self, k: int) -> QuadraticPolynomial:
        """Return f(X^k)."""
        n = self.degree * k + 1
        rat, rad = [0] * n, [0] * n
        for j in range(self.degree + 1):
            rat[j * k] = self.rat[j]
            rad[j * k] = self.rad[j]
        return QuadraticPolynomial(self.radicand, tuple(rat), tuple(rad))

    def __str__(self) -> str:
        return render_quadratic(self)


def psi_negate(psi_: QuadraticPolynomial) -> QuadraticPolynomial:
    """The other sign variant, Psi(-X); monic because degrees are even."""
    return psi_.twist(-1)


def _rotate(v: list[int], e: int) -> list[int]:
    return v[-e:] + v[:-e] if e else v[:]


def _root_product(N: int, roots: list[tuple[int, int]]) -> list[list[int]]:
    """prod (X - s*g^e) over Z[C_N]; roots are (s, e) with s = +-1."""
    poly = [[1] + [0] * (N - 1)]
    for s, e in roots:
        nxt = [[0] * N for _ in range(len(poly) + 1)]
        for k, coeff in enumerate(poly):
            row = nxt[k + 1]
            for i, c in enumerate(coeff):
                row[i] += c
            rot = _rotate(coeff, e)
            row = nxt[k]
            for i, c in enumerate(rot):
                row[i] -= s * c
        poly = nxt
    return poly


def _descend_all(N: int, poly: list[list[int]], root, radicand: int) -> QuadraticPolynomial:
    rat, rad = [], []
    for vec in poly:
        a, b = descend_quadratic(from_group_ring(N, vec), root)
        rat.append(a)
        rad.append(b)
    return QuadraticPolynomial(radicand, tuple(rat), tuple(rad))


@lru_cache(maxsize=None)
def psi(p: int, t: int) -> QuadraticPolynomial:
    """Psi_{p,t}(X) = prod_{a in U(pt)} (X - (a/p) zeta_{pt}^a), over Z[sqrt(p*)]."""
    if p == 2 or not is_prime(p):
        raise BadArguments(f"psi needs an odd prime p, got {p}")
    if t < 1 or t % 2 == 0:
        raise BadArguments(f"psi needs odd t >= 1, got {t}")
    N = p * t
    roots = [(legendre(a, p), a) for a in range(1, N) if gcd(a, N) == 1]
    root = embed(gauss_sum(p), N)
    return _descend_all(N, _root_product(N, roots), root, p_star(p))


@lru_cache(maxsize=None)
def psi_two(t: int, sign: int = 1) -> QuadraticPolynomial:
    """Psi_{2,t} (sign=+1) or Psi_{-2,t} (sign=-1) over Z[sqrt(+-2)].

    Roots are zeta_8^c * zeta_t^a for a in U(t) and c in {1, -1} (sign +)
    or c in {1, 3} (sign -).
    """
    if sign not in (1, -1):
        raise BadArguments(f"sign must be +1 or -1, got {sign}")
    if t < 1 or t % 2 == 0:
        raise BadArguments(f"psi_two needs odd t >= 1, got {t}")
    N = 8 * t
    eighths = (1, 7) if sign == 1 else (1, 3)
    units = [a for a in range(t) if gcd(a, t) == 1] if t > 1 else [0]
    roots = [(1, (c * t + 8 * a) % N) for a in units for c in eighths]
    root = embed(sqrt_two_elem() if sign == 1 else sqrt_minus_two_elem(), N)
    return _descend_all(N, _root_product(N, roots), root, 2 * sign)


def recursion_cofactor_sign(kind: int, l: int) -> int:
    """Twist in Psi_t(X^l) = Psi_{tl}(eps X) * Psi_t(eps X), prime l coprime to the level.

    ``kind`` is the odd prime p for Psi_{p,t}, or +-2 for Psi_{+-2,t}.
    eps is (l/p), chi_2(l) or chi_{-2}(l) respectively; for Psi_{p,t} the
    first factor carries no twist.
    """
    if kind == 2:
        return char_two(l)
    if kind == -2:
        return char_minus_two(l)
    return legendre(l, kind)


def render_quadratic(f: QuadraticPolynomial, var: str = "X", root: str = "s") -> str:
    """``X^4 + s*X^3 + 3*X^2 + s*X + 1 where s^2 = 5``."""
    terms = []
    for k in range(f.degree, -1, -1):
        for c, is_rad in ((f.rat[k], False), (f.rad[k], True)):
            if c == 0:
                continue
            a = abs(c)
            parts = [] if a == 1 and (is_rad or k) else [str(a)]
            if is_rad:
                parts.append(root)
            if k:
                parts.append(var if k == 1 else f"{var}^{k}")
            body = "*".join(parts)
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
    text = " ".join(terms) if terms else "0"
    return f"{text} where {root}^2 = {f.radicand}"
