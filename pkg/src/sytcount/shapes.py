"""Tableau shapes and their cell posets.

Cells are addressed 1-based as ``(row, column)`` with rows numbered top to
bottom; poset element ids are 0-based in reading order (row by row, left to
right).  Within a row, and within a column, every pair of *consecutive
present* cells is ordered, so a hole never breaks a row or column chain.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union


class ShapeError(ValueError):
    """A shape violates one of its invariants."""


class ShapeParseError(ShapeError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


Cell = tuple[int, int]


@dataclass(frozen=True)
class CellPoset:
    """Partial order on ``n`` elements given by its cover relation.

    ``covers`` holds pairs ``(x, y)`` meaning x is covered by y (x must come
    first).  ``chains``, when present, partitions the elements into chains
    listed bottom to top; the counting oracle uses it to encode order ideals
    as prefix profiles.
    """

    n: int
    covers: frozenset[tuple[int, int]]
    cells: tuple[Cell, ...] | None = None
    chains: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        for x, y in self.covers:
            if not (0 <= x < self.n and 0 <= y < self.n) or x == y:
                raise ShapeError(f"bad cover ({x}, {y}) for {self.n} elements")
        if topological_order(self.n, self.covers) is None:
            raise ShapeError("cover relation has a cycle")

    def lower_covers(self) -> list[list[int]]:
        below: list[list[int]] = [[] for _ in range(self.n)]
        for x, y in self.covers:
            below[y].append(x)
        return below

    def upper_covers(self) -> list[list[int]]:
        above: list[list[int]] = [[] for _ in range(self.n)]
        for x, y in self.covers:
            above[x].append(y)
        return above

    def dual(self) -> CellPoset:
        chains = None if self.chains is None else tuple(tuple(reversed(c)) for c in self.chains)
        return CellPoset(self.n, frozenset((y, x) for x, y in self.covers), self.cells, chains)

    def relabeled(self, perm: Sequence[int]) -> CellPoset:
        """Rename element ``i`` to ``perm[i]``; cell and chain metadata follow."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation")
        cells = None
        if self.cells is not None:
            inv = [0] * self.n
            for i, p in enumerate(perm):
                inv[p] = i
            cells = tuple(self.cells[inv[j]] for j in range(self.n))
        chains = None
        if self.chains is not None:
            chains = tuple(tuple(perm[x] for x in c) for c in self.chains)
        return CellPoset(self.n, frozenset((perm[x], perm[y]) for x, y in self.covers), cells, chains)

    def without_chains(self) -> CellPoset:
        return CellPoset(self.n, self.covers, self.cells, None)


def topological_order(n: int, relations: Iterable[tuple[int, int]]) -> list[int] | None:
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for x, y in relations:
        out[x].append(y)
        indeg[y] += 1
    ready = [i for i in range(n) if indeg[i] == 0]
    order = []
    while ready:
        x = ready.pop()
        order.append(x)
        for y in out[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                ready.append(y)
    return order if len(order) == n else None


def transitive_reduction(n: int, relations: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    rel = set(relations)
    order = topological_order(n, rel)
    if order is None:
        raise ShapeError("relation has a cycle")
    succ: list[set[int]] = [set() for _ in range(n)]
    for x, y in rel:
        succ[x].add(y)
    # reach[x] = everything strictly above x
    reach: list[set[int]] = [set() for _ in range(n)]
    for x in reversed(order):
        for y in succ[x]:
            reach[x] |= reach[y] | {y}
    reduced = set()
    for x, y in rel:
        if not any(y in reach[z] for z in succ[x] if z != y):
            reduced.add((x, y))
    return frozenset(reduced)


# --------------------------------------------------------------------------
# shape types


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if not parts:
            raise ShapeError("partition must have at least one positive part")
        if any(p < 1 for p in parts):
            raise ShapeError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ShapeError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def d(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return self.parts

    def grid(self) -> CellGrid:
        return CellGrid.from_lengths(self.parts)

    def poset(self) -> CellPoset:
        return build_poset(self.grid())

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        outer = self.outer if isinstance(self.outer, Partition) else Partition(tuple(self.outer))
        inner = tuple(int(m) for m in self.inner)
        while inner and inner[-1] == 0:
            inner = inner[:-1]
        if any(m < 0 for m in inner):
            raise ShapeError(f"inner shape has a negative part: {inner}")
        if any(a < b for a, b in zip(inner, inner[1:])):
            raise ShapeError(f"inner shape must be weakly decreasing: {inner}")
        if len(inner) >= outer.d:
            raise ShapeError(f"inner shape must have fewer rows than the outer ({len(inner)} >= {outer.d})")
        for i, m in enumerate(inner):
            if m >= outer.parts[i]:
                raise ShapeError(f"inner part {m} must be smaller than outer part {outer.parts[i]} (row {i + 1})")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def d(self) -> int:
        return self.outer.d

    @property
    def mu(self) -> tuple[int, ...]:
        """Inner shape zero-padded to the outer length."""
        return self.inner + (0,) * (self.d - len(self.inner))

    @property
    def n(self) -> int:
        return self.outer.n - sum(self.inner)

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(l - m for l, m in zip(self.outer.parts, self.mu))

    def grid(self) -> CellGrid:
        return CellGrid(tuple(tuple(range(m + 1, l + 1)) for l, m in zip(self.outer.parts, self.mu)))

    def poset(self) -> CellPoset:
        return build_poset(self.grid())

    def __str__(self) -> str:
        return f"{self.outer}/{','.join(map(str, self.inner)) or '0'}"


@dataclass(frozen=True)
class ShiftedShape:
    partition: Partition

    def __post_init__(self) -> None:
        p = self.partition if isinstance(self.partition, Partition) else Partition(tuple(self.partition))
        if any(a <= b for a, b in zip(p.parts, p.parts[1:])):
            raise ShapeError(f"shifted shape needs strictly decreasing parts: {p.parts}")
        object.__setattr__(self, "partition", p)

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return self.partition.parts

    def grid(self) -> CellGrid:
        return shifted_grid(self.partition)

    def poset(self) -> CellPoset:
        return build_poset(self.grid())

    def __str__(self) -> str:
        return f"shifted:{self.partition}"


@dataclass(frozen=True)
class CellGrid:
    """Rows of 1-based column indices, top row first."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(sorted(set(int(c) for c in r))) for r in self.rows)
        if not rows:
            raise ShapeError("grid needs at least one row")
        for i, r in enumerate(rows, 1):
            if not r:
                raise ShapeError(f"row {i} is empty")
            if r[0] < 1:
                raise ShapeError(f"row {i} has a column index below 1")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_lengths(cls, lengths: Sequence[int], holes: Iterable[Cell] = ()) -> CellGrid:
        holes = set(holes)
        for r, c in holes:
            if not (1 <= r <= len(lengths) and 1 <= c <= lengths[r - 1]):
                raise ShapeError(f"hole ({r},{c}) lies outside the grid")
        return cls(tuple(tuple(c for c in range(1, l + 1) if (i, c) not in holes) for i, l in enumerate(lengths, 1)))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def cells(self) -> list[Cell]:
        return [(i, c) for i, r in enumerate(self.rows, 1) for c in r]

    def holes(self) -> list[Cell]:
        """Cells missing between column 1 and the row's last column."""
        return [(i, c) for i, r in enumerate(self.rows, 1) for c in range(1, r[-1] + 1) if c not in set(r)]

    def is_left_justified(self) -> bool:
        return all(r == tuple(range(1, len(r) + 1)) for r in self.rows)

    def grid(self) -> CellGrid:
        return self

    def poset(self) -> CellPoset:
        return build_poset(self)

    def __str__(self) -> str:
        hs = self.holes()
        if not hs and self.is_left_justified():
            return "rows:" + ",".join(str(len(r)) for r in self.rows)
        if all(r[0] == 1 for r in self.rows):
            lengths = ",".join(str(r[-1]) for r in self.rows)
            return "rows:" + lengths + "".join(f" hole:{r},{c}" for r, c in hs)
        return "cells:" + ";".join(",".join(map(str, r)) for r in self.rows)


@dataclass(frozen=True)
class PsytShape:
    """Partially standard shape: row lengths ``outer``, column-ordered region ``inner``."""

    inner: tuple[int, ...]
    outer: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(int(x) for x in self.inner)
        b = tuple(int(x) for x in self.outer)
        if len(a) != len(b) or not b:
            raise ShapeError(f"inner and outer row counts differ: {a} vs {b}")
        if any(x < 0 for x in a):
            raise ShapeError(f"inner row lengths must be nonnegative: {a}")
        if any(y < 1 for y in b):
            raise ShapeError(f"outer row lengths must be positive: {b}")
        if any(x > y for x, y in zip(a, b)):
            raise ShapeError(f"inner must fit inside outer: {a} vs {b}")
        object.__setattr__(self, "inner", a)
        object.__setattr__(self, "outer", b)

    @property
    def n(self) -> int:
        return sum(self.outer)

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return self.outer

    def grid(self) -> CellGrid:
        return CellGrid.from_lengths(self.outer)

    def poset(self) -> CellPoset:
        return psyt_poset(self)

    def __str__(self) -> str:
        return f"psyt:{','.join(map(str, self.inner))}<{','.join(map(str, self.outer))}"


ShapeSpec = Union[Partition, SkewShape, ShiftedShape, CellGrid, PsytShape]


# --------------------------------------------------------------------------
# posets


def _index(grid: CellGrid) -> tuple[list[Cell], dict[Cell, int]]:
    cells = grid.cells()
    return cells, {c: i for i, c in enumerate(cells)}


def _row_chains(grid: CellGrid, ids: dict[Cell, int]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(ids[(i, c)] for c in r) for i, r in enumerate(grid.rows, 1))


def _row_covers(grid: CellGrid, ids: dict[Cell, int]) -> set[tuple[int, int]]:
    out = set()
    for chain in _row_chains(grid, ids):
        out.update(zip(chain, chain[1:]))
    return out


def build_poset(grid: CellGrid) -> CellPoset:
    cells, ids = _index(grid)
    covers = _row_covers(grid, ids)
    by_col: dict[int, list[int]] = {}
    for i, r in enumerate(grid.rows, 1):
        for c in r:
            by_col.setdefault(c, []).append(i)
    for c, rows in by_col.items():
        for r1, r2 in zip(rows, rows[1:]):
            covers.add((ids[(r1, c)], ids[(r2, c)]))
    return CellPoset(len(cells), transitive_reduction(len(cells), covers), tuple(cells), _row_chains(grid, ids))


def psyt_poset(shape: PsytShape) -> CellPoset:
    grid = shape.grid()
    cells, ids = _index(grid)
    covers = _row_covers(grid, ids)
    a = shape.inner
    for i in range(len(a) - 1):
        for c in range(1, min(a[i], a[i + 1]) + 1):
            covers.add((ids[(i + 1, c)], ids[(i + 2, c)]))
    return CellPoset(len(cells), transitive_reduction(len(cells), covers), tuple(cells), _row_chains(grid, ids))


def shifted_grid(p: Partition | Sequence[int]) -> CellGrid:
    p = p if isinstance(p, Partition) else Partition(tuple(p))
    if any(a <= b for a, b in zip(p.parts, p.parts[1:])):
        raise ShapeError(f"shifted shape needs strictly decreasing parts: {p.parts}")
    return CellGrid(tuple(tuple(range(i, i + l)) for i, l in enumerate(p.parts, 1)))


def to_poset(shape: ShapeSpec) -> CellPoset:
    return shape.poset()


# --------------------------------------------------------------------------
# parsing

_INT_LIST = re.compile(r"\s*\d+\s*(,\s*\d+\s*)*")


def _int_list(text: str, start: int, whole: str) -> tuple[int, ...]:
    m = _INT_LIST.fullmatch(text)
    if not m:
        bad = next((i for i, ch in enumerate(text) if not (ch.isdigit() or ch in ", \t")), None)
        if bad is None:
            bad = len(text.rstrip())
            msg = "malformed integer list"
        else:
            msg = f"unexpected character {text[bad]!r}"
        raise ShapeParseError(msg, whole, start + bad)
    return tuple(int(tok) for tok in text.split(","))


def parse_shape(text: str) -> ShapeSpec:
    """Parse a shape spec string.

    Grammar: ``4,2,1`` | ``5,4,2/3,1`` | ``shifted:4,2,1`` |
    ``rows:3,3,3 hole:2,2`` (any number of holes) | ``psyt:1,2,3<2,3,4``.
    """
    whole = text
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    if not stripped:
        raise ShapeParseError("empty shape", whole, 0)

    head, sep, rest = stripped.partition(":")
    if sep:
        kind = head.strip()
        body_off = offset + len(head) + 1
        if kind == "shifted":
            return ShiftedShape(Partition(_int_list(rest, body_off, whole)))
        if kind == "psyt":
            a_txt, lt, b_txt = rest.partition("<")
            if not lt:
                raise ShapeParseError("psyt shape needs '<'", whole, body_off + len(rest))
            a = _int_list(a_txt, body_off, whole)
            b = _int_list(b_txt, body_off + len(a_txt) + 1, whole)
            return PsytShape(a, b)
        if kind == "rows":
            return _parse_rows(rest, body_off, whole)
        raise ShapeParseError(f"unknown shape kind {kind!r}", whole, offset)

    outer_txt, slash, inner_txt = stripped.partition("/")
    outer = _int_list(outer_txt, offset, whole)
    if not slash:
        return Partition(outer)
    inner = _int_list(inner_txt, offset + len(outer_txt) + 1, whole) if inner_txt.strip() else ()
    return SkewShape(Partition(outer), inner)


def _parse_rows(body: str, off: int, whole: str) -> CellGrid:
    pieces = re.split(r"(\bhole\s*:)", body)
    lengths = _int_list(pieces[0], off, whole)
    if any(l < 1 for l in lengths):
        raise ShapeError(f"row lengths must be positive: {lengths}")
    pos = off + len(pieces[0])
    holes = []
    for marker, spec in zip(pieces[1::2], pieces[2::2]):
        pos += len(marker)
        rc = _int_list(spec, pos, whole)
        if len(rc) != 2:
            raise ShapeParseError("hole needs ROW,COL", whole, pos)
        holes.append((rc[0], rc[1]))
        pos += len(spec)
    if len(pieces) % 2 == 0:
        raise ShapeParseError("dangling hole marker", whole, pos)
    return CellGrid.from_lengths(lengths, holes)


def format_shape(shape: ShapeSpec) -> str:
    return str(shape)


# --------------------------------------------------------------------------
# enumeration


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n in reverse lexicographic order."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partitions_in_box(max_part: int, max_rows: int) -> Iterator[tuple[int, ...]]:
    """Nonempty partitions with at most ``max_rows`` parts, each at most ``max_part``."""
    def rec(rows_left: int, cap: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if rows_left == 0:
            return
        for first in range(cap, 0, -1):
            for rest in rec(rows_left - 1, first):
                yield (first,) + rest

    for p in rec(max_rows, max_part):
        if p:
            yield p


def skew_shapes(max_part: int, max_rows: int, max_n: int) -> Iterator[SkewShape]:
    """Every valid skew shape whose outer shape fits the box and with at most ``max_n`` cells."""
    for outer in partitions_in_box(max_part, max_rows):
        d = len(outer)

        def inners(i: int, cap: int) -> Iterator[tuple[int, ...]]:
            yield ()
            if i >= d - 1:
                return
            for mu in range(min(cap, outer[i] - 1), 0, -1):
                for rest in inners(i + 1, mu):
                    yield (mu,) + rest

        for inner in inners(0, outer[0]):
            if 1 <= sum(outer) - sum(inner) <= max_n:
                yield SkewShape(Partition(outer), inner)
