"""Set the closed-form counts beside enumeration and report where they part ways."""

from __future__ import annotations

import argparse
import logging
from dataclasses import dataclass, field

from ssweil.census import even_formula_table, odd_bound_table


@dataclass
class ComparisonConfig:
    primes: list[int] = field(default_factory=lambda: [2, 3, 5, 7, 11, 13])
    even_dims: list[int] = field(default_factory=lambda: list(range(2, 7)))
    odd_dims: list[int] = field(default_factory=lambda: [3, 4, 5, 6])
    odd_exponents: list[int] = field(default_factory=lambda: [1, 3])


def run(cfg: ComparisonConfig) -> None:
    print("even exponent: p g formula enumerated")
    for r in even_formula_table(cfg.primes, cfg.even_dims):
        f = "n/a" if r.formula is None else r.formula
        mark = "" if r.formula is None or r.agrees else "  <- differs"
        print(f"  {r.p:3d} {r.g:2d} {f:>6} {r.enumerated:6d}{mark}")
    print("odd exponent: p n g bound enumerated")
    for n in cfg.odd_exponents:
        for r in odd_bound_table(cfg.primes, cfg.odd_dims, n=n):
            print(f"  {r.p:3d} {r.n} {r.g:2d} {r.bound:5d} {r.enumerated:6d}{'' if r.holds else '  <- bound violated'}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", type=int, nargs="+")
    ap.add_argument("-v", "--verbose", action="store_true")
    a = ap.parse_args()
    logging.basicConfig(level=logging.WARNING if a.verbose else logging.ERROR)
    cfg = ComparisonConfig()
    if a.primes:
        cfg.primes = a.primes
    run(cfg)
