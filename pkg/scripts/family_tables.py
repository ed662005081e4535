"""Tabulate each product-formula family against the linear-extension oracle.

Also prints the Selberg-integral route for the truncated staircase.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from itertools import product

from sytcount.oracle import OracleLimitError, count_linear_extensions
from sytcount.products import FAMILY_COUNTS, FAMILY_SHAPES, staircase_via_selberg


@dataclass
class Config:
    max_m: int = 4
    max_k: int = 4
    max_r: int = 2
    memo_limit: int = 2_000_000


def grid(name: str, cfg: Config):
    ms = range(cfg.max_m + 1)
    ks = range(cfg.max_k + 1)
    if name == "staircase":
        return [(m, k) for m, k in product(ms, ks) if k >= 1]
    if name == "psyt":
        return [(m, r, k) for m, r, k in product(ms, range(cfg.max_r + 1), ks) if k >= 1]
    if name == "necorner":
        return [(m, k) for m, k in product(ms, ks) if 1 <= m and k <= m]
    if name == "secondrow":
        return [(m, k) for m, k in product(ms, ks) if m >= 2]
    return [(m,) for m in ms]


def run(cfg: Config) -> int:
    failures = 0
    for name in FAMILY_COUNTS:
        print(f"\n{name}")
        for params in grid(name, cfg):
            shape = FAMILY_SHAPES[name](*params)
            formula = FAMILY_COUNTS[name](*params)
            try:
                oracle = count_linear_extensions(shape.poset(), limit=cfg.memo_limit)
            except OracleLimitError:
                oracle = None
            extra = f"  selberg={staircase_via_selberg(*params)}" if name == "staircase" else ""
            flag = "" if oracle in (None, formula) else "  MISMATCH"
            failures += bool(flag)
            print(f"  {str(params):<12} {str(shape):<28} formula={formula:<14} oracle={oracle}{extra}{flag}")
    return failures


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    for field in ("max_m", "max_k", "max_r", "memo_limit"):
        parser.add_argument(f"--{field.replace('_', '-')}", type=int, default=getattr(Config, field))
    args = parser.parse_args()
    raise SystemExit(1 if run(Config(**vars(args))) else 0)
