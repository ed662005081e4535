"""Monte Carlo z-scores for a set of shapes over many seeds.

Under the null each z is roughly standard normal, so the printed mean and
standard deviation should sit near 0 and 1.
"""

from __future__ import annotations

import argparse
import statistics
from dataclasses import dataclass

from sytcount.montecarlo import Z_GATE, estimate
from sytcount.shapes import parse_shape


@dataclass
class Config:
    shapes: tuple[str, ...] = ("1,1", "4,2,1", "5,4,2/3,1", "shifted:4,2,1", "rows:3,3,3 hole:2,2")
    trials: int = 100_000
    seeds: int = 20


def run(cfg: Config) -> int:
    over = 0
    for spec in cfg.shapes:
        shape = parse_shape(spec)
        zs = [estimate(shape, cfg.trials, seed).z_score for seed in range(cfg.seeds)]
        over += sum(abs(z) >= Z_GATE for z in zs)
        print(
            f"{spec:<22} mean z {statistics.fmean(zs):+.3f}  sd {statistics.pstdev(zs):.3f}"
            f"  max |z| {max(map(abs, zs)):.3f}"
        )
    print(f"{over} run(s) outside |z| < {Z_GATE}")
    return over


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=Config.trials)
    parser.add_argument("--seeds", type=int, default=Config.seeds)
    args = parser.parse_args()
    raise SystemExit(1 if run(Config(trials=args.trials, seeds=args.seeds)) else 0)
