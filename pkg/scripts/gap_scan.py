"""List gap dimensions, cross-check them against sampled fields and a printed list."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from ssweil.census import count, exists_dimension, gap_dimensions
from ssweil.numthy import inverse_phi

PRINTED = [7, 13, 17, 19, 31, 37, 43, 47, 61, 67, 71, 73, 79, 97,
           25, 27, 34, 38, 45, 57, 62, 63, 76, 77, 85, 87, 91, 93, 94, 95]


@dataclass
class GapConfig:
    max_g: int = 100
    sample_primes: list[int] = field(default_factory=lambda: [2, 3, 5, 7])
    sample_exponents: list[int] = field(default_factory=lambda: [1, 2])


def run(cfg: GapConfig) -> None:
    gaps = gap_dimensions(cfg.max_g)
    print(f"{len(gaps)} gaps up to {cfg.max_g}: {' '.join(map(str, gaps))}")
    for g in gaps:
        hits = [(p, n) for p in cfg.sample_primes for n in cfg.sample_exponents if count(p, n, g)]
        if hits:
            print(f"  g={g}: classes found at {hits}, which would contradict the gap")
    if cfg.max_g >= 97:
        for g in sorted(set(PRINTED) - set(gaps)):
            print(f"  printed {g} is not a gap: phi^-1({2 * g}) = {inverse_phi(2 * g)}, verdict {exists_dimension(g).value}")
        for g in sorted(set(gaps) - set(PRINTED)):
            print(f"  {g} is a gap missing from the printed list")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", dest="max_g", type=int, default=100)
    run(GapConfig(max_g=ap.parse_args().max_g))
