"""Print per-dimension class listings for a set of fields, optionally to files."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from ssweil.cli import summary_lines


@dataclass
class TableConfig:
    fields: list[tuple[int, int]] = field(default_factory=lambda: [(2, 1), (3, 1), (2, 2), (3, 2), (2, 3)])
    max_g: int = 7
    out_dir: Path | None = None


def run(cfg: TableConfig) -> None:
    for p, n in cfg.fields:
        text = "\n".join(summary_lines(p, n, cfg.max_g))
        if cfg.out_dir is None:
            print(text, end="\n\n")
        else:
            cfg.out_dir.mkdir(parents=True, exist_ok=True)
            (cfg.out_dir / f"classes_{p}_{n}.txt").write_text(text + "\n")


def parse_field(text: str) -> tuple[int, int]:
    p, n = text.split("^")
    return int(p), int(n)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", action="append", type=parse_field, help="p^n, repeatable")
    ap.add_argument("--max-g", type=int, default=7)
    ap.add_argument("--out-dir", type=Path)
    a = ap.parse_args()
    cfg = TableConfig(max_g=a.max_g, out_dir=a.out_dir)
    if a.field:
        cfg.fields = a.field
    run(cfg)
