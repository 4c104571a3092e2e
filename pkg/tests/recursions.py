"""Rebuild Psi step by step from level 1 and compare each step with the direct product.

For a prime l and kind p (odd prime) or +-2:
    l | level            Psi_{t l}(eps X) = Psi_t(X^l)
    l coprime to level   Psi_t(X^l) = Psi_{t l}(eps X) * Psi_t(eps X)
with eps = 1 for odd p when l | level, eps = (l/p) for odd p in the coprime
step but only on the cofactor, and eps = chi_{+-2}(l) throughout for +-2.
"""

from __future__ import annotations

from ssweil.numthy import factorize
from ssweil.psipoly import psi, psi_two, recursion_cofactor_sign


def _get(kind: int, t: int):
    return psi(kind, t) if kind > 2 else psi_two(t, 1 if kind == 2 else -1)


def recursion_steps(kind: int, t: int) -> list[tuple[int, int, bool]]:
    """(t_before, l, holds) for each prime step from 1 up to t."""
    primes = [l for l, k in factorize(t) for _ in range(k)] if t > 1 else []
    if kind > 2:
        primes = [l for l in primes if l == kind] + [l for l in primes if l != kind]
    out = []
    cur = 1
    for l in primes:
        level = cur * (kind if kind > 2 else 8)
        base, nxt = _get(kind, cur), _get(kind, cur * l)
        lifted = base.compose_power(l)
        if level % l == 0:
            eps = 1 if kind > 2 else recursion_cofactor_sign(kind, l)
            ok = nxt.twist(eps) == lifted
        else:
            eps = recursion_cofactor_sign(kind, l)
            head = nxt if kind > 2 else nxt.twist(eps)
            ok = lifted == head * base.twist(eps)
        out.append((cur, l, ok))
        cur *= l
    return out


USED_CASES = [(2, 1), (2, 3), (2, 5), (2, 7), (2, 9), (-2, 1), (-2, 3), (-2, 5), (-2, 7), (-2, 9),
              (3, 1), (3, 3), (3, 5), (3, 7), (5, 1), (5, 3), (7, 1), (7, 3), (11, 1), (13, 1)]
