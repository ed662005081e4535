"""Monte Carlo check of the order-statistics model.

Each row of a shape gets its own group of i.i.d. uniforms, sorted ascending
and laid into the row left to right.  The event of interest is that every
cover of the cell poset holds strictly; its probability is the tableau
count divided by the multinomial of the row lengths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .exact import multinomial
from .shapes import CellPoset, ShapeSpec

BLOCK_SIZE = 1 << 16
Z_GATE = 4.0


@dataclass(frozen=True)
class McReport:
    trials: int
    hits: int
    p_hat: Fraction
    p_exact: Fraction
    sigma: float
    z_score: float

    @property
    def passed(self) -> bool:
        return abs(self.z_score) < Z_GATE

    def as_dict(self) -> dict:
        return {
            "trials": self.trials,
            "hits": self.hits,
            "pHat": str(self.p_hat),
            "pExact": str(self.p_exact),
            "sigma": self.sigma,
            "zScore": self.z_score,
        }


def _rows_and_covers(shape: ShapeSpec | CellPoset) -> tuple[tuple[tuple[int, ...], ...], np.ndarray, int]:
    poset = shape if isinstance(shape, CellPoset) else shape.poset()
    if poset.chains is None:
        raise ValueError("Monte Carlo needs a shape with rows")
    covers = np.array(sorted(poset.covers), dtype=np.intp).reshape(-1, 2)
    return poset.chains, covers, poset.n


def sample_event(shape: ShapeSpec | CellPoset, rng: np.random.Generator) -> bool:
    """One draw of the row groups; True iff all cover constraints hold strictly."""
    rows, covers, n = _rows_and_covers(shape)
    values = np.empty(n)
    for row in rows:
        values[list(row)] = np.sort(rng.random(len(row)))
    return bool(np.all(values[covers[:, 0]] < values[covers[:, 1]]))


def _block_hits(rows, covers, n: int, size: int, rng: np.random.Generator) -> int:
    values = np.empty((size, n))
    for row in rows:
        values[:, list(row)] = np.sort(rng.random((size, len(row))), axis=1)
    ok = np.ones(size, dtype=bool)
    for x, y in covers:
        ok &= values[:, x] < values[:, y]
    return int(ok.sum())


def count_hits(shape: ShapeSpec | CellPoset, trials: int, seed: int) -> int:
    """Hits over ``trials`` draws; block b uses the b-th spawned substream of ``seed``."""
    if trials < 1:
        raise ValueError("trials must be positive")
    rows, covers, n = _rows_and_covers(shape)
    nblocks = -(-trials // BLOCK_SIZE)
    streams = np.random.SeedSequence(seed).spawn(nblocks)
    hits = 0
    for b, ss in enumerate(streams):
        size = min(BLOCK_SIZE, trials - b * BLOCK_SIZE)
        hits += _block_hits(rows, covers, n, size, np.random.default_rng(ss))
    return hits


def exact_probability(shape: ShapeSpec, count: int) -> Fraction:
    lengths = shape.row_lengths
    return Fraction(count, multinomial(sum(lengths), lengths))


def estimate(
    shape: ShapeSpec,
    trials: int,
    seed: int,
    exact_count: Callable[[ShapeSpec], int] | None = None,
) -> McReport:
    if exact_count is None:
        from .methods import auto_count

        exact_count = auto_count
    p_exact = exact_probability(shape, exact_count(shape))
    hits = count_hits(shape, trials, seed)
    p_hat = Fraction(hits, trials)
    sigma = math.sqrt(float(p_exact * (1 - p_exact)) / trials)
    diff = float(p_hat - p_exact)
    if sigma == 0:
        z = 0.0 if diff == 0 else math.copysign(math.inf, diff)
    else:
        z = diff / sigma
    return McReport(trials, hits, p_hat, p_exact, sigma, z)
