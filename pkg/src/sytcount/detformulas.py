"""Product and determinant formulas for straight and skew tableaux, and the
volume function J_lambda(t_1..t_d) of the nested simplex.

Entries follow the zero convention throughout: a term whose power of t (or
whose factorial argument) would be negative is exactly 0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .exact import as_integer, det_rational, factorial, falling, inv_factorial
from .polyint import MPoly, antiderivative, poly_det, substitute
from .shapes import Partition, SkewShape

JMatrix = list[list[MPoly]]


def _as_partition(p: Partition | Sequence[int]) -> Partition:
    return p if isinstance(p, Partition) else Partition(tuple(p))


def tvars(d: int) -> list[str]:
    return [f"t{i}" for i in range(1, d + 1)]


def frobenius_young(p: Partition | Sequence[int]) -> int:
    lam = _as_partition(p).parts
    d = len(lam)
    value = Fraction(factorial(sum(lam)))
    for i in range(d):
        for j in range(i + 1, d):
            value *= lam[i] - lam[j] - i + j
    for i in range(d):
        value /= factorial(lam[i] + d - (i + 1))
    return as_integer(value, f"hook formula for {lam}")


def aitken_matrix(s: SkewShape) -> list[list[Fraction]]:
    lam, mu, d = s.outer.parts, s.mu, s.d
    return [[inv_factorial(lam[i] - mu[j] - i + j) for j in range(d)] for i in range(d)]


def aitken_count(s: SkewShape | Partition) -> int:
    if isinstance(s, Partition):
        s = SkewShape(s, ())
    return as_integer(factorial(s.n) * det_rational(aitken_matrix(s)), f"Aitken determinant for {s}")


def _power_entry(coeff: Fraction | int, var: str, exp: int) -> MPoly:
    if exp < 0:
        return MPoly({})
    return MPoly({((var, exp),): coeff})


def jmatrix_closed(p: Partition | Sequence[int]) -> JMatrix:
    """Entry (i, j) is (lam_i+d-i)_{d-j} t_i^(lam_i+j-i) / (lam_i+d-i)!."""
    lam = _as_partition(p).parts
    d = len(lam)
    ts = tvars(d)
    rows = []
    for i in range(1, d + 1):
        top = lam[i - 1] + d - i
        rows.append([
            _power_entry(Fraction(falling(top, d - j), factorial(top)), ts[i - 1], lam[i - 1] + j - i)
            for j in range(1, d + 1)
        ])
    return rows


def jmatrix_skew_closed(s: SkewShape) -> JMatrix:
    """Entry (i, j) is (lam_i+d-i)_{d+mu_j-j} t_i^(lam_i-mu_j+j-i) / (lam_i+d-i)!."""
    lam, mu, d = s.outer.parts, s.mu, s.d
    ts = tvars(d)
    rows = []
    for i in range(1, d + 1):
        top = lam[i - 1] + d - i
        row = []
        for j in range(1, d + 1):
            exp = lam[i - 1] - mu[j - 1] + j - i
            coeff = Fraction(falling(top, d + mu[j - 1] - j), factorial(top)) if exp >= 0 else 0
            row.append(_power_entry(coeff, ts[i - 1], exp))
        rows.append(row)
    return rows


def fd_closed(d: int) -> JMatrix:
    """Entry (i, j) is (j)_{i-1} y_i^(j-i+1) / j!; its determinant is F_d(y_1..y_d)."""
    if d < 1:
        raise ValueError("d must be positive")
    return [
        [_power_entry(Fraction(falling(j, i - 1), factorial(j)), f"y{i}", j - i + 1) for j in range(1, d + 1)]
        for i in range(1, d + 1)
    ]


def _check_t(t: Sequence[Fraction | int], d: int) -> list[Fraction]:
    t = [Fraction(x) for x in t]
    if len(t) != d:
        raise ValueError(f"need {d} values of t, got {len(t)}")
    if not (0 < t[0] and all(a <= b for a, b in zip(t, t[1:])) and t[-1] <= 1):
        raise ValueError(f"t must satisfy 0 < t_1 <= ... <= t_d <= 1, got {[str(x) for x in t]}")
    return t


def evaluate_matrix(m: JMatrix, values: dict[str, Fraction]) -> list[list[Fraction]]:
    return [[e.evaluate(values) for e in row] for row in m]


def jvolume(p: Partition | Sequence[int], t: Sequence[Fraction | int]) -> Fraction:
    lam = _as_partition(p)
    t = _check_t(t, lam.d)
    return det_rational(evaluate_matrix(jmatrix_closed(lam), dict(zip(tvars(lam.d), t))))


def jvolume_skew(s: SkewShape, t: Sequence[Fraction | int]) -> Fraction:
    t = _check_t(t, s.d)
    return det_rational(evaluate_matrix(jmatrix_skew_closed(s), dict(zip(tvars(s.d), t))))


class IntegrationError(ArithmeticError):
    """The row-cancellation step of the column integration did not hold."""


def jvolume_by_integration(p: Partition | Sequence[int]) -> MPoly:
    """J_lambda(t) obtained by integrating the cells column by column.

    Row i of the working matrix is a function of y_i, the value of the next
    not-yet-integrated cell of row i (or t_i once the row is exhausted).  The
    first column is already integrated by ``fd_closed``.  For every later
    column the cells are integrated bottom row first; the cell in row i runs
    from the cell above it (y_{i-1}) to y_i.  Choosing the antiderivative
    whose value at y_{i-1} reproduces row i-1 makes the lower-limit term a
    determinant with two equal rows, so only the upper limit survives.
    """
    lam = _as_partition(p).parts
    d = len(lam)
    rows = [list(r) for r in fd_closed(d)]
    ys = [f"y{i}" for i in range(1, d + 1)]

    for col in range(2, lam[0] + 1):
        height = sum(1 for l in lam if l >= col)
        for i in range(height - 1, -1, -1):
            prim = [antiderivative(e, ys[i]) for e in rows[i]]
            if i == 0:
                # lower limit 0, and prim vanishes there
                rows[i] = prim
                continue
            above = [substitute(e, ys[i - 1], MPoly.var(ys[i])) for e in rows[i - 1]]
            shift = [a - g for a, g in zip(above, prim)]
            if not all(s.is_constant() for s in shift):
                raise IntegrationError(f"row {i} is not an antiderivative of row {i + 1} (column {col})")
            rows[i] = [g + s for g, s in zip(prim, shift)]

    det = poly_det(rows)
    for y, t in zip(ys, tvars(d)):
        det = substitute(det, y, MPoly.var(t))
    return det


def count_via_volume(shape: Partition | SkewShape) -> int:
    """n! times the nested-simplex volume at t = (1, ..., 1)."""
    if isinstance(shape, Partition):
        vol = jvolume(shape, [1] * shape.d)
    elif isinstance(shape, SkewShape):
        vol = jvolume_skew(shape, [1] * shape.d)
    else:
        raise TypeError(f"volume method needs a straight or skew shape, got {type(shape).__name__}")
    return as_integer(factorial(shape.n) * vol, f"n! * J(1) for {shape}")


def count_via_integration(p: Partition | Sequence[int]) -> int:
    lam = _as_partition(p)
    vol = jvolume_by_integration(lam).evaluate({t: 1 for t in tvars(lam.d)})
    return as_integer(factorial(lam.n) * vol, f"n! * integrated J(1) for {lam}")


def vandermonde_check(xs: Sequence[int]) -> tuple[int, int]:
    """(det((x_i)_{d-j}), prod_{i<j}(x_i - x_j)) for x_1 > ... > x_d >= 0."""
    xs = list(xs)
    if not xs or xs[-1] < 0 or any(a <= b for a, b in zip(xs, xs[1:])):
        raise ValueError(f"need strictly decreasing nonnegative integers, got {xs}")
    d = len(xs)
    det = det_rational([[falling(x, d - j) for j in range(1, d + 1)] for x in xs])
    prod = 1
    for i in range(d):
        for j in range(i + 1, d):
            prod *= xs[i] - xs[j]
    return as_integer(det), prod


Countable = Union[Partition, SkewShape]
