"""Ground-truth linear extension counts.

``count_linear_extensions`` runs a forward DP over the lattice of order
ideals, one layer (ideal size) at a time.  When the poset carries a chain
partition (every shape poset does: its rows) an ideal is encoded as the
tuple of filled prefix lengths per chain; otherwise as a bitmask.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from .shapes import CellPoset

DEFAULT_MEMO_LIMIT = 5_000_000
BRUTE_FORCE_MAX = 10


class OracleLimitError(RuntimeError):
    """The ideal lattice is larger than the configured memo limit."""


def _valid_chains(p: CellPoset) -> bool:
    if p.chains is None:
        return False
    seen = sorted(x for c in p.chains for x in c)
    if seen != list(range(p.n)):
        return False
    cov = p.covers
    return all((a, b) in cov for c in p.chains for a, b in zip(c, c[1:]))


def count_linear_extensions(p: CellPoset, limit: int = DEFAULT_MEMO_LIMIT) -> int:
    if p.n == 0:
        return 1
    if _valid_chains(p):
        return _count_profiles(p, limit)
    return _count_bitmask(p, limit)


def _overflow(seen: int, limit: int) -> OracleLimitError:
    return OracleLimitError(
        f"order-ideal lattice exceeds the memo limit ({seen} > {limit} states); "
        "raise the limit or use a closed-form method"
    )


def _count_profiles(p: CellPoset, limit: int) -> int:
    chains = p.chains
    where = {}
    for ci, chain in enumerate(chains):
        for pos, x in enumerate(chain):
            where[x] = (ci, pos)
    below = p.lower_covers()
    # needs[ci][pos]: (chain, prefix length) pairs that must already be filled
    needs = [
        [tuple((where[y][0], where[y][1] + 1) for y in below[x] if where[y][0] != ci) for x in chain]
        for ci, chain in enumerate(chains)
    ]
    lengths = [len(c) for c in chains]
    layer = {tuple([0] * len(chains)): 1}
    seen = 1
    for _ in range(p.n):
        nxt: dict[tuple[int, ...], int] = {}
        for prof, ways in layer.items():
            for ci, filled in enumerate(prof):
                if filled == lengths[ci]:
                    continue
                if all(prof[cj] >= need for cj, need in needs[ci][filled]):
                    new = prof[:ci] + (filled + 1,) + prof[ci + 1:]
                    nxt[new] = nxt.get(new, 0) + ways
        seen += len(nxt)
        if seen > limit:
            raise _overflow(seen, limit)
        layer = nxt
    return sum(layer.values())


def _count_bitmask(p: CellPoset, limit: int) -> int:
    pred = [0] * p.n
    for x, y in p.covers:
        pred[y] |= 1 << x
    layer = {0: 1}
    seen = 1
    for _ in range(p.n):
        nxt: dict[int, int] = {}
        for mask, ways in layer.items():
            for x in range(p.n):
                bit = 1 << x
                if not mask & bit and pred[x] & ~mask == 0:
                    nxt[mask | bit] = nxt.get(mask | bit, 0) + ways
        seen += len(nxt)
        if seen > limit:
            raise _overflow(seen, limit)
        layer = nxt
    return sum(layer.values())


@lru_cache(maxsize=4)
def _all_permutations(n: int) -> np.ndarray:
    # row r is a labeling: perms[r, element] = position of element
    out = np.array(list(permutations(range(n))), dtype=np.int8).reshape(-1, n)
    out.setflags(write=False)
    return out


def brute_force_extensions(p: CellPoset) -> int:
    """Count labelings among all n! permutations that respect every cover."""
    if p.n > BRUTE_FORCE_MAX:
        raise ValueError(f"brute force is limited to n <= {BRUTE_FORCE_MAX}, got n={p.n}")
    if p.n == 0:
        return 1
    perms = _all_permutations(p.n)
    ok = np.ones(len(perms), dtype=bool)
    for x, y in p.covers:
        ok &= perms[:, x] < perms[:, y]
    return int(ok.sum())


def enumerate_extensions(p: CellPoset, limit: int) -> list[tuple[int, ...]]:
    """Up to ``limit`` labelings (label of element 0, 1, ...), lexicographic in that word."""
    if p.n > BRUTE_FORCE_MAX:
        raise ValueError(f"enumeration is limited to n <= {BRUTE_FORCE_MAX}, got n={p.n}")
    if limit < 1:
        raise ValueError("limit must be positive")
    out = []
    for labels in permutations(range(1, p.n + 1)):
        if all(labels[x] < labels[y] for x, y in p.covers):
            out.append(labels)
            if len(out) == limit:
                break
    return out
