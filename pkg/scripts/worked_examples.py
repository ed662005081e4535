"""Recompute the published numeric examples and time each method on them."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from sytcount import methods
from sytcount.cli import SKEW_EXAMPLE_COUNT
from sytcount.shapes import parse_shape


@dataclass
class Config:
    shapes: tuple[tuple[str, int], ...] = (
        ("4,2,1", 35),
        ("5,4,2/3,1", 169),
        ("shifted:4,2,1", 7),
        ("rows:2,3,4", 12),
        ("psyt:1,2,3<2,3,4", 72),
        ("rows:3,3,3 hole:2,2", 18),
        ("6,5,4,4,1/3,2,2", SKEW_EXAMPLE_COUNT),
    )
    skip_brute_above: int = 10


def run(cfg: Config) -> bool:
    all_ok = True
    print(f"{'shape':<22} {'expected':>9}  method     count       ms")
    for spec, expected in cfg.shapes:
        shape = parse_shape(spec)
        for name in methods.applicable(shape):
            if name == "brute" and shape.n > cfg.skip_brute_above:
                continue
            start = time.perf_counter()
            value = methods.count_with(shape, name)
            ms = (time.perf_counter() - start) * 1000
            ok = value == expected
            all_ok &= ok
            print(f"{spec:<22} {expected:>9}  {name:<9} {value:>7} {ms:>8.2f}{'' if ok else '  MISMATCH'}")
    return all_ok


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--skip-brute-above", type=int, default=Config.skip_brute_above)
    args = parser.parse_args()
    raise SystemExit(0 if run(Config(skip_brute_above=args.skip_brute_above)) else 1)
