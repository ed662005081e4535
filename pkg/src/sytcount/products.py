"""Closed-form counts for truncated shapes and PSYT.

Gamma ratios are multiplied out exactly with ``HalfGamma``; a result that is
not a pi-free nonnegative integer raises ``FormulaError`` instead of being
rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import HalfGamma, binomial, factorial, gamma_at, multinomial
from .shapes import CellGrid, PsytShape

HALF = Fraction(1, 2)


class FormulaError(ArithmeticError):
    pass


def _count(value: HalfGamma | Fraction, what: str) -> int:
    if isinstance(value, HalfGamma):
        if value.pi_half_exp != 0:
            raise FormulaError(f"{what}: pi does not cancel ({value})")
        value = value.rat
    if value.denominator != 1 or value < 0:
        raise FormulaError(f"{what}: not a nonnegative integer ({value})")
    return value.numerator


def _half_integer(x: Fraction | int, name: str) -> Fraction:
    x = Fraction(x)
    if (2 * x).denominator != 1:
        raise ValueError(f"{name}={x} is not a half-integer")
    return x


@dataclass(frozen=True)
class SelbergParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    k: int

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, _half_integer(getattr(self, name), name))
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("alpha and beta must be positive")
        if self.gamma < 0:
            raise ValueError("gamma must be nonnegative")
        if self.k < 1:
            raise ValueError("k must be positive")


def _gamma(x: Fraction) -> HalfGamma:
    if x <= 0:
        raise ValueError(f"Gamma argument {x} is not positive")
    return gamma_at(x)


def selberg_rhs(p: SelbergParams) -> HalfGamma:
    """k! prod_i G(a+ig) G(b+ig) G(g+ig) / (G(a+b+(i+k-1)g) G(g))."""
    a, b, g, k = p.alpha, p.beta, p.gamma, p.k
    value = HalfGamma(Fraction(factorial(k)))
    for i in range(k):
        value = value * _gamma(a + i * g) * _gamma(b + i * g) * _gamma(g + i * g)
        value = value / (_gamma(a + b + (i + k - 1) * g) * _gamma(g))
    return value


def truncated_staircase_count(m: int, k: int) -> int:
    """Number of SYT of the left-justified shape with rows m+1, m+2, ..., m+k."""
    if m < 0 or k < 1:
        raise ValueError(f"need m >= 0, k >= 1 (got m={m}, k={k})")
    value = HalfGamma(Fraction(factorial(m * k + k * (k + 1) // 2)))
    for i in range(k):
        value = value * gamma_at(m + 1 + HALF * i) * gamma_at(1 + HALF * i) * gamma_at(HALF * (1 + i))
        value = value / (gamma_at(m + 1 + HALF * (i + k + 1)) * gamma_at(m + 1 + i) * gamma_at(HALF))
    return _count(value, f"truncated staircase m={m}, k={k}")


def staircase_via_selberg(m: int, k: int) -> int:
    """Same count through the Selberg integral at alpha=m+1, beta=1, gamma=1/2.

    The ordered-simplex integral is 1/k! of the Selberg cube integral because
    the integrand is symmetric.
    """
    sel = selberg_rhs(SelbergParams(m + 1, 1, HALF, k)).to_fraction()
    denom = factorial(k)
    for i in range(1, k + 1):
        denom *= factorial(m + i - 1)
    return _count(factorial(m * k + k * (k + 1) // 2) * sel / denom, f"Selberg route m={m}, k={k}")


def psyt_count(m: int, r: int, k: int) -> int:
    """Number of PSYT of shape (m+1..m+k) inside (m+r+1..m+r+k)."""
    if m < 0 or r < 0 or k < 1:
        raise ValueError(f"need m, r >= 0, k >= 1 (got m={m}, r={r}, k={k})")
    value = HalfGamma(Fraction(factorial((m + r) * k + k * (k + 1) // 2)))
    for i in range(k):
        value = value * gamma_at(m + 1 + HALF * i) * gamma_at(r + 1 + HALF * i) * gamma_at(HALF * (1 + i))
        value = value / (
            gamma_at(m + r + 1 + HALF * (i + k + 1)) * gamma_at(m + 1 + i) * gamma_at(r + 1) * gamma_at(HALF)
        )
    return _count(value, f"PSYT m={m}, r={r}, k={k}")


def ne_corner_removed_count(m: int, k: int) -> int:
    """SYT of (m+1, m+1, m-k) with the north-east corner box removed."""
    if m < 1 or not 0 <= k <= m:
        raise ValueError(f"need m >= 1, 0 <= k <= m (got m={m}, k={k})")
    value = Fraction(multinomial(3 * m - k + 1, [m, m + 1, m - k]))
    value *= Fraction((k + 2) ** 2 * (2 * m + 1) + (m + 2), (m + 1) * (m + 2) * (2 * m + 1) * (2 * m + 3))
    return _count(value, f"NE corner m={m}, k={k}")


def second_row_truncated_count(m: int, k: int) -> int:
    """SYT of (m+k, m, m) with the last box of the second row removed."""
    if m < 2 or k < 0:
        raise ValueError(f"need m >= 2, k >= 0 (got m={m}, k={k})")
    first = Fraction((k + 2) ** 2 * (2 * m - 3) + m, (m + k + 2) * (m + k + 1)) * multinomial(
        3 * m + k - 1, [m + k, m - 1, m]
    )
    second = Fraction(3, 3 * m - 1) * multinomial(3 * m - 1, [m + 1, m - 2, m])
    value = Fraction(1, (2 * m - 1) * (2 * m - 3)) * (first - second)
    return _count(value, f"second-row truncation m={m}, k={k}")


def middle_hole_count(m: int) -> int:
    """SYT of (m+3, 3, 3) with the middle box of the second row removed."""
    if m < 0:
        raise ValueError(f"need m >= 0 (got m={m})")
    value = Fraction(m + 5, 10) * binomial(m + 2, 2) * binomial(m + 9, 2)
    return _count(value, f"middle hole m={m}")


# shapes of each family, for cross-checking against the oracle


def staircase_grid(m: int, k: int) -> CellGrid:
    return CellGrid.from_lengths([m + i for i in range(1, k + 1)])


def psyt_shape(m: int, r: int, k: int) -> PsytShape:
    return PsytShape(tuple(m + i for i in range(1, k + 1)), tuple(m + r + i for i in range(1, k + 1)))


def ne_corner_grid(m: int, k: int) -> CellGrid:
    return CellGrid.from_lengths([l for l in (m, m + 1, m - k) if l > 0])


def second_row_grid(m: int, k: int) -> CellGrid:
    return CellGrid.from_lengths([m + k, m - 1, m])


def middle_hole_grid(m: int) -> CellGrid:
    return CellGrid.from_lengths([m + 3, 3, 3], holes=[(2, 2)])


def match_family(shape) -> tuple[str, tuple[int, ...]] | None:
    """Identify a shape as a member of one of the product-formula families."""
    if isinstance(shape, PsytShape):
        a, b = shape.inner, shape.outer
        k = len(a)
        m, r = a[0] - 1, b[0] - a[0]
        if m >= 0 and a == tuple(m + i for i in range(1, k + 1)) and b == tuple(m + r + i for i in range(1, k + 1)):
            return "psyt", (m, r, k)
        return None
    grid = shape.grid() if not isinstance(shape, CellGrid) else shape
    if grid.rows != CellGrid.from_lengths(grid.row_lengths).rows:
        # only holed or offset grids reach here
        if len(grid.rows) == 3 and grid.holes() == [(2, 2)] and all(r[0] == 1 for r in grid.rows):
            ends = [r[-1] for r in grid.rows]
            if ends[1:] == [3, 3] and ends[0] >= 3:
                return "hole", (ends[0] - 3,)
        return None
    lengths = grid.row_lengths
    k = len(lengths)
    m = lengths[0] - 1
    if m >= 0 and lengths == tuple(m + i for i in range(1, k + 1)):
        return "staircase", (m, k)
    if k in (2, 3) and lengths[0] >= 1 and lengths[1] == lengths[0] + 1:
        m = lengths[0]
        kk = m - lengths[2] if k == 3 else m
        if 0 <= kk <= m and ne_corner_grid(m, kk).row_lengths == lengths:
            return "necorner", (m, kk)
    if k == 3 and lengths[2] >= 2 and lengths[1] == lengths[2] - 1 and lengths[0] >= lengths[2]:
        m = lengths[2]
        return "secondrow", (m, lengths[0] - m)
    return None


FAMILY_COUNTS = {
    "staircase": truncated_staircase_count,
    "psyt": psyt_count,
    "necorner": ne_corner_removed_count,
    "secondrow": second_row_truncated_count,
    "hole": middle_hole_count,
}

FAMILY_SHAPES = {
    "staircase": staircase_grid,
    "psyt": psyt_shape,
    "necorner": ne_corner_grid,
    "secondrow": second_row_grid,
    "hole": middle_hole_grid,
}


def product_count(shape) -> int:
    match = match_family(shape)
    if match is None:
        raise ValueError(f"shape {shape} is not in a product-formula family")
    name, params = match
    return FAMILY_COUNTS[name](*params)
