"""Exact integer/rational helpers.

Integers are plain Python ints and rationals are ``fractions.Fraction``;
both are arbitrary precision and ``Fraction`` is always kept in lowest
terms, which is what the rest of the package relies on for structural
equality.  ``HalfGamma`` carries values of the form ``q * pi**(e/2)`` so
Gamma ratios at half-integers can be multiplied out without floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial as _factorial
from typing import Sequence

Rational = Fraction


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return _factorial(n)


def inv_factorial(m: int) -> Fraction:
    """1/m!, with the convention 1/m! = 0 for m < 0."""
    if m < 0:
        return Fraction(0)
    return Fraction(1, _factorial(m))


def falling(n: int, k: int) -> int:
    """(n)_k = n(n-1)...(n-k+1); the empty product is 1."""
    if k < 0:
        raise ValueError(f"falling factorial needs k >= 0, got {k}")
    out = 1
    for i in range(k):
        out *= n - i
    return out


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return falling(n, k) // _factorial(k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {list(parts)}")
    if sum(parts) != n:
        raise ValueError(f"parts {list(parts)} do not sum to {n}")
    out = _factorial(n)
    for p in parts:
        out //= _factorial(p)
    return out


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if k < 0 or n < 0:
        raise ValueError("negative argument")
    if k > n:
        raise ValueError(f"stirling2 needs k <= n, got n={n}, k={k}")
    if n == 0:
        return 1
    if k == 0:
        return 0
    total = k * stirling2(n - 1, k) if k <= n - 1 else 0
    return total + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def stirling1_signed(r: int, k: int) -> int:
    """Signed Stirling number of the first kind: (x)_r = sum_k s(r,k) x^k."""
    if k < 0 or r < 0:
        raise ValueError("negative argument")
    if k > r:
        raise ValueError(f"stirling1 needs k <= r, got r={r}, k={k}")
    if r == 0:
        return 1
    if k == 0:
        return 0
    # (x)_r = (x)_{r-1} * (x - (r-1))
    total = -(r - 1) * stirling1_signed(r - 1, k) if k <= r - 1 else 0
    return total + stirling1_signed(r - 1, k - 1)


@dataclass(frozen=True)
class HalfGamma:
    """The exact value ``rat * pi**(pi_half_exp / 2)``."""

    rat: Fraction
    pi_half_exp: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "rat", Fraction(self.rat))
        if self.rat == 0 and self.pi_half_exp != 0:
            object.__setattr__(self, "pi_half_exp", 0)

    def __mul__(self, other: HalfGamma | Fraction | int) -> HalfGamma:
        if not isinstance(other, HalfGamma):
            other = HalfGamma(Fraction(other))
        return HalfGamma(self.rat * other.rat, self.pi_half_exp + other.pi_half_exp)

    __rmul__ = __mul__

    def __truediv__(self, other: HalfGamma | Fraction | int) -> HalfGamma:
        if not isinstance(other, HalfGamma):
            other = HalfGamma(Fraction(other))
        if other.rat == 0:
            raise ZeroDivisionError("division by zero HalfGamma")
        return HalfGamma(self.rat / other.rat, self.pi_half_exp - other.pi_half_exp)

    def __rtruediv__(self, other: Fraction | int) -> HalfGamma:
        return HalfGamma(Fraction(other)) / self

    @property
    def is_rational(self) -> bool:
        return self.pi_half_exp == 0

    def to_fraction(self) -> Fraction:
        if self.pi_half_exp != 0:
            raise ArithmeticError(f"value carries pi^({self.pi_half_exp}/2)")
        return self.rat

    def __float__(self) -> float:
        import math

        return float(self.rat) * math.pi ** (self.pi_half_exp / 2)

    def __str__(self) -> str:
        if self.pi_half_exp == 0:
            return str(self.rat)
        return f"{self.rat}*pi^({self.pi_half_exp}/2)"


def gamma_half(two_n: int) -> HalfGamma:
    """Gamma(two_n / 2) for a positive integer ``two_n``."""
    if two_n <= 0:
        raise ValueError(f"Gamma({two_n}/2) is not supported (argument must be positive)")
    if two_n % 2 == 0:
        return HalfGamma(Fraction(_factorial(two_n // 2 - 1)))
    j = two_n // 2
    # Gamma(j + 1/2) = (2j)! / (4^j j!) * sqrt(pi)
    return HalfGamma(Fraction(_factorial(2 * j), 4**j * _factorial(j)), 1)


def gamma_at(x: Fraction | int) -> HalfGamma:
    """Gamma at a positive half-integer given as a rational."""
    two_x = Fraction(x) * 2
    if two_x.denominator != 1:
        raise ValueError(f"Gamma argument {x} is not a half-integer")
    return gamma_half(int(two_x))


def beta_integral(r: int, s: int) -> Fraction:
    """int_0^1 x^r (1-x)^s dx = r! s! / (r+s+1)!."""
    if r < 0 or s < 0:
        raise ValueError("beta_integral needs r, s >= 0")
    return Fraction(_factorial(r) * _factorial(s), _factorial(r + s + 1))


def det_rational(matrix: Sequence[Sequence[Fraction | int]]) -> Fraction:
    """Exact determinant by Gaussian elimination with nonzero pivoting."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    a = [[Fraction(x) for x in row] for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            f = a[r][col]
            if f == 0:
                continue
            f /= p
            row_r, row_c = a[r], a[col]
            for c in range(col + 1, n):
                row_r[c] -= f * row_c[c]
    return det


def as_integer(value: Fraction | HalfGamma, what: str = "value") -> int:
    """Return ``value`` as an int, raising ArithmeticError if it is not one."""
    if isinstance(value, HalfGamma):
        value = value.to_fraction()
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return value.numerator
