"""Named counting methods and the rules for which shapes each accepts."""

from __future__ import annotations

from typing import Callable

from . import detformulas, oracle, products
from .shapes import CellGrid, Partition, PsytShape, ShapeSpec, SkewShape

METHOD_NAMES = ("hook", "aitken", "volume", "integrate", "product", "oracle", "brute")


class MethodMismatch(ValueError):
    """The requested method does not apply to this shape class."""


def _straight(shape: ShapeSpec) -> bool:
    return isinstance(shape, Partition)


def _straight_or_skew(shape: ShapeSpec) -> bool:
    return isinstance(shape, (Partition, SkewShape))


def _as_skew(shape: Partition | SkewShape) -> SkewShape:
    return shape if isinstance(shape, SkewShape) else SkewShape(shape, ())


def _has_product(shape: ShapeSpec) -> bool:
    return products.match_family(shape) is not None


def _small(shape: ShapeSpec) -> bool:
    return shape.n <= oracle.BRUTE_FORCE_MAX


# name -> (applicable, count)
METHODS: dict[str, tuple[Callable[[ShapeSpec], bool], Callable[[ShapeSpec], int]]] = {
    "hook": (_straight, detformulas.frobenius_young),
    "aitken": (_straight_or_skew, lambda s: detformulas.aitken_count(_as_skew(s))),
    "volume": (_straight_or_skew, detformulas.count_via_volume),
    "integrate": (_straight, detformulas.count_via_integration),
    "product": (_has_product, products.product_count),
    "oracle": (lambda s: True, lambda s: oracle.count_linear_extensions(s.poset())),
    "brute": (_small, lambda s: oracle.brute_force_extensions(s.poset())),
}


def applicable(shape: ShapeSpec) -> list[str]:
    return [name for name, (ok, _) in METHODS.items() if ok(shape)]


def count_with(shape: ShapeSpec, method: str) -> int:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    ok, fn = METHODS[method]
    if not ok(shape):
        raise MethodMismatch(f"method {method!r} does not apply to {describe(shape)} {shape}")
    return fn(shape)


def auto_method(shape: ShapeSpec) -> str:
    if _has_product(shape):
        return "product"
    if _straight(shape):
        return "hook"
    if _straight_or_skew(shape):
        return "aitken"
    return "oracle"


def auto_count(shape: ShapeSpec) -> int:
    return count_with(shape, auto_method(shape))


def describe(shape: ShapeSpec) -> str:
    return {
        Partition: "straight shape",
        SkewShape: "skew shape",
        CellGrid: "cell grid",
        PsytShape: "PSYT shape",
    }.get(type(shape), "shifted shape")
