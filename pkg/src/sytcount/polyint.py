"""Sparse multivariate polynomials over Q and exact integration over
chain simplexes and the standard simplex.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable,
with every exponent positive; the constant monomial is ``()``.  Variables are
strings and sort "naturally" (``x2 < x10``).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .exact import factorial, falling, multinomial

Monomial = tuple[tuple[str, int], ...]
Scalar = Union[Fraction, int]


def var_key(name: str) -> tuple:
    return tuple(int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", name))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), key=lambda ve: var_key(ve[0])))


class MPoly:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("_terms", "gens", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None, gens: Iterable[str] = ()):
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                mono = tuple(sorted(((v, e) for v, e in mono if e != 0), key=lambda ve: var_key(ve[0])))
                if any(e < 0 for _, e in mono):
                    raise ValueError(f"negative exponent in {mono}")
                clean[mono] = clean.get(mono, Fraction(0)) + c
        self._terms = {m: c for m, c in clean.items() if c != 0}
        names = set(gens)
        for mono in self._terms:
            names.update(v for v, _ in mono)
        self.gens: tuple[str, ...] = tuple(sorted(names, key=var_key))
        self._hash = None

    # construction helpers

    @classmethod
    def const(cls, c: Scalar, gens: Iterable[str] = ()) -> MPoly:
        return cls({(): c}, gens)

    @classmethod
    def var(cls, name: str) -> MPoly:
        return cls({((name, 1),): 1})

    @classmethod
    def monomial(cls, coeff: Scalar, **exps: int) -> MPoly:
        return cls({tuple(exps.items()): coeff})

    @classmethod
    def coerce(cls, x: MPoly | Scalar) -> MPoly:
        return x if isinstance(x, MPoly) else cls.const(x)

    # inspection

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == () for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def variables(self) -> set[str]:
        return {v for mono in self._terms for v, _ in mono}

    def degree(self, v: str | None = None) -> int:
        if not self._terms:
            return -1
        if v is None:
            return max(sum(e for _, e in m) for m in self._terms)
        return max(dict(m).get(v, 0) for m in self._terms)

    def coeff(self, mono: Mapping[str, int] | Monomial = ()) -> Fraction:
        items = mono.items() if isinstance(mono, Mapping) else mono
        key = tuple(sorted(((v, e) for v, e in items if e), key=lambda ve: var_key(ve[0])))
        return self._terms.get(key, Fraction(0))

    # arithmetic

    def __add__(self, other: MPoly | Scalar) -> MPoly:
        other = MPoly.coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return MPoly(out, self.gens + other.gens)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly({m: -c for m, c in self._terms.items()}, self.gens)

    def __sub__(self, other: MPoly | Scalar) -> MPoly:
        return self + (-MPoly.coerce(other))

    def __rsub__(self, other: MPoly | Scalar) -> MPoly:
        return MPoly.coerce(other) - self

    def __mul__(self, other: MPoly | Scalar) -> MPoly:
        if not isinstance(other, MPoly):
            c = Fraction(other)
            return MPoly({m: c * v for m, v in self._terms.items()}, self.gens)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return MPoly(out, self.gens + other.gens)

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> MPoly:
        c = Fraction(c)
        return MPoly({m: v / c for m, v in self._terms.items()}, self.gens)

    def __pow__(self, e: int) -> MPoly:
        """Power by multinomial expansion over the terms of ``self``."""
        if e < 0:
            raise ValueError("negative power")
        if e == 0:
            return MPoly.const(1, self.gens)
        terms = list(self._terms.items())
        if not terms:
            return MPoly({}, self.gens)
        out: dict[Monomial, Fraction] = {}
        for ks in compositions(e, len(terms)):
            coeff = Fraction(multinomial(e, ks))
            mono: Monomial = ()
            for (m, c), k in zip(terms, ks):
                if k:
                    coeff *= c**k
                    mono = _mono_mul(mono, tuple((v, ee * k) for v, ee in m))
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return MPoly(out, self.gens)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in sorted(self._terms.items(), key=lambda mc: [(var_key(v), -e) for v, e in mc[0]]):
            factors = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append(factors)
            elif c == -1:
                parts.append("-" + factors)
            else:
                parts.append(f"{c}*{factors}")
        return " + ".join(parts).replace("+ -", "- ")

    # calculus and substitution

    def derivative(self, v: str) -> MPoly:
        out: dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            exps = dict(mono)
            e = exps.get(v, 0)
            if e == 0:
                continue
            exps[v] = e - 1
            key = tuple((x, y) for x, y in exps.items() if y)
            out[key] = out.get(key, Fraction(0)) + c * e
        return MPoly(out, self.gens)

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        for mono, c in self._terms.items():
            term = c
            for v, e in mono:
                if v not in values:
                    raise KeyError(f"no value for variable {v!r}")
                term *= Fraction(values[v]) ** e
            total += term
        return total


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative ints summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def antiderivative(p: MPoly, v: str) -> MPoly:
    """The antiderivative in ``v`` with zero constant term in ``v``."""
    out: dict[Monomial, Fraction] = {}
    for mono, c in p.items():
        exps = dict(mono)
        e = exps.get(v, 0) + 1
        exps[v] = e
        out[tuple(exps.items())] = c / e
    return MPoly(out, p.gens + (v,))


def substitute(p: MPoly, v: str, val: MPoly | Scalar) -> MPoly:
    """Replace variable ``v`` by ``val`` (a polynomial or a constant)."""
    val = MPoly.coerce(val)
    powers: dict[int, MPoly] = {0: MPoly.const(1)}
    out = MPoly({}, tuple(g for g in p.gens if g != v))
    for mono, c in p.items():
        exps = dict(mono)
        e = exps.pop(v, 0)
        if e not in powers:
            powers[e] = val**e
        rest = MPoly({tuple(exps.items()): c})
        out = out + rest * powers[e]
    return out


def chain_integrate(p: MPoly, vars: Sequence[str], upper: MPoly | Scalar | str = 1) -> MPoly:
    """Integral of ``p`` over 0 < x_1 < ... < x_m < upper.

    Integrates the innermost variable x_m over (x_{m-1}, upper) first and
    works outward; x_0 is 0.
    """
    if isinstance(upper, str):
        upper = MPoly.var(upper)
    upper = MPoly.coerce(upper)
    cur = p
    for j in range(len(vars) - 1, -1, -1):
        v = vars[j]
        g = antiderivative(cur, v)
        lower: MPoly | int = MPoly.var(vars[j - 1]) if j > 0 else 0
        cur = substitute(g, v, upper) - substitute(g, v, lower)
    return cur


def dirichlet_monomial(exponents: Sequence[int]) -> Fraction:
    """Integral of prod x_i^a_i over {x_i >= 0, sum x_i <= 1}."""
    if any(a < 0 for a in exponents):
        raise ValueError("exponents must be nonnegative")
    num = 1
    for a in exponents:
        num *= factorial(a)
    return Fraction(num, factorial(sum(exponents) + len(exponents)))


def simplex_integrate(p: MPoly, vars: Sequence[str]) -> Fraction:
    """Integral of ``p`` over the standard simplex in the variables ``vars``."""
    stray = p.variables() - set(vars)
    if stray:
        raise ValueError(f"polynomial has variables outside the simplex: {sorted(stray)}")
    total = Fraction(0)
    for mono, c in p.items():
        exps = dict(mono)
        total += c * dirichlet_monomial([exps.get(v, 0) for v in vars])
    return total


def xvars(m: int, prefix: str = "x") -> list[str]:
    return [f"{prefix}{i}" for i in range(1, m + 1)]


def linear_form(coeffs: Sequence[Scalar], vars: Sequence[str]) -> MPoly:
    return MPoly({((v, 1),): c for c, v in zip(coeffs, vars)})


# Stirling numbers of the second kind as integrals over order statistics.


def _check_stirling_args(n: int, k: int, m: int) -> None:
    if not (1 <= k <= n and k <= m):
        raise ValueError(f"need 1 <= k <= n and k <= m, got n={n}, k={k}, m={m}")


def stirling2_expectation(n: int, k: int, m: int | None = None) -> Fraction:
    """C(n+m-k, m) * E(xi_{1,m} + ... + xi_{k,m})^(n-k) for uniform order statistics.

    The expectation is m! times the chain integral (the joint density of m
    uniform order statistics is m!).  With m = k this is C(n, k) E(...).
    """
    m = k if m is None else m
    _check_stirling_args(n, k, m)
    xs = xvars(m)
    integrand = linear_form([1] * k, xs[:k]) ** (n - k)
    expectation = factorial(m) * chain_integrate(integrand, xs, 1).constant_term()
    return binomial_frac(n + m - k, m) * expectation


def stirling2_by_chain(n: int, k: int, m: int) -> Fraction:
    """(n+m-k)_m times the chain integral of (x_1+...+x_k)^(n-k)."""
    _check_stirling_args(n, k, m)
    xs = xvars(m)
    integrand = linear_form([1] * k, xs[:k]) ** (n - k)
    return falling(n + m - k, m) * chain_integrate(integrand, xs, 1).constant_term()


def stirling2_by_simplex(n: int, k: int, m: int) -> Fraction:
    """(n+m-k)_m times the simplex integral of (x_1+2x_2+...+kx_k)^(n-k)."""
    _check_stirling_args(n, k, m)
    xs = xvars(m)
    integrand = linear_form(range(1, k + 1), xs[:k]) ** (n - k)
    return falling(n + m - k, m) * simplex_integrate(integrand, xs)


def binomial_frac(n: int, k: int) -> Fraction:
    return Fraction(falling(n, k), factorial(k))


def poly_det(matrix: Sequence[Sequence[MPoly | Scalar]]) -> MPoly:
    """Determinant of a square matrix of polynomials (Laplace expansion, memoized on column sets)."""
    n = len(matrix)
    if n == 0 or any(len(r) != n for r in matrix):
        raise ValueError("matrix must be square and nonempty")
    a = [[MPoly.coerce(x) for x in row] for row in matrix]
    memo: dict[tuple[int, ...], MPoly] = {}

    def minor(row: int, cols: tuple[int, ...]) -> MPoly:
        if row == n:
            return MPoly.const(1)
        if cols in memo:
            return memo[cols]
        total = MPoly({})
        for idx, c in enumerate(cols):
            entry = a[row][c]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:idx] + cols[idx + 1:])
            term = entry * sub
            total = total - term if idx % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


__all__ = [
    "MPoly",
    "antiderivative",
    "substitute",
    "chain_integrate",
    "dirichlet_monomial",
    "simplex_integrate",
    "stirling2_expectation",
    "stirling2_by_chain",
    "stirling2_by_simplex",
    "poly_det",
    "compositions",
    "xvars",
    "linear_form",
]
