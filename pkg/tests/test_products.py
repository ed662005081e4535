from fractions import Fraction

import pytest

from sytcount.exact import factorial
from sytcount.oracle import count_linear_extensions
from sytcount.polyint import MPoly, chain_integrate
from sytcount.products import (
    FAMILY_COUNTS,
    FAMILY_SHAPES,
    FormulaError,
    SelbergParams,
    match_family,
    middle_hole_count,
    ne_corner_removed_count,
    product_count,
    psyt_count,
    second_row_truncated_count,
    selberg_rhs,
    staircase_via_selberg,
    truncated_staircase_count,
)
from sytcount.shapes import Partition, parse_shape

HALF = Fraction(1, 2)


def test_staircase_examples():
    assert truncated_staircase_count(0, 1) == 1
    assert truncated_staircase_count(0, 3) == 2
    assert truncated_staircase_count(1, 3) == 12
    assert truncated_staircase_count(2, 2) == 5


def test_psyt_examples():
    assert psyt_count(0, 1, 3) == 72
    assert psyt_count(0, 0, 2) == 1
    assert psyt_count(0, 1, 2) == 4


@pytest.mark.parametrize("m", range(4))
@pytest.mark.parametrize("k", range(1, 5))
def test_psyt_with_r0_is_staircase(m, k):
    assert psyt_count(m, 0, k) == truncated_staircase_count(m, k)


@pytest.mark.parametrize("m", range(3))
@pytest.mark.parametrize("k", range(1, 4))
def test_selberg_route(m, k):
    assert staircase_via_selberg(m, k) == truncated_staircase_count(m, k)


def test_selberg_rhs_examples():
    assert selberg_rhs(SelbergParams(2, 1, HALF, 2)).to_fraction() == Fraction(1, 15)
    assert selberg_rhs(SelbergParams(2, 3, HALF, 1)).to_fraction() == Fraction(1, 12)
    assert selberg_rhs(SelbergParams(2, 1, HALF, 2)).pi_half_exp == 0


def ordered_selberg(a, b, g, k):
    """Integral over 0 < x1 < ... < xk < 1 of the Selberg integrand, integer a, b, 2g."""
    xs = [MPoly.var(f"x{i}") for i in range(1, k + 1)]
    p = MPoly.const(1)
    for x in xs:
        p = p * x ** (a - 1) * (1 - x) ** (b - 1)
    for i in range(k):
        for j in range(i + 1, k):
            p = p * (xs[j] - xs[i]) ** int(2 * g)
    return chain_integrate(p, [f"x{i}" for i in range(1, k + 1)], 1).constant_term()


@pytest.mark.parametrize("a", [1, 2, 3])
@pytest.mark.parametrize("b", [1, 2])
@pytest.mark.parametrize("g", [HALF, 1])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_selberg_rhs_by_direct_integration(a, b, g, k):
    assert selberg_rhs(SelbergParams(a, b, g, k)).to_fraction() == factorial(k) * ordered_selberg(a, b, g, k)


def test_selberg_params_validation():
    with pytest.raises(ValueError):
        SelbergParams(Fraction(1, 3), 1, HALF, 1)
    with pytest.raises(ValueError):
        SelbergParams(1, 1, -HALF, 1)
    with pytest.raises(ValueError):
        SelbergParams(1, 1, HALF, 0)


def test_gamma_zero_hits_a_pole():
    # G(g) with g = 0 in the denominator
    with pytest.raises(ValueError):
        selberg_rhs(SelbergParams(1, 1, 0, 2))


def test_small_family_values():
    assert ne_corner_removed_count(1, 0) == 2
    assert ne_corner_removed_count(1, 1) == 1
    assert second_row_truncated_count(2, 0) == 3
    assert [middle_hole_count(m) for m in range(6)] == [18, 81, 231, 528, 1053, 1911]


def test_out_of_range_rejected():
    for call in [
        lambda: truncated_staircase_count(-1, 1),
        lambda: truncated_staircase_count(0, 0),
        lambda: psyt_count(0, -1, 1),
        lambda: ne_corner_removed_count(0, 0),
        lambda: ne_corner_removed_count(2, 3),
        lambda: second_row_truncated_count(1, 0),
        lambda: middle_hole_count(-1),
    ]:
        with pytest.raises(ValueError):
            call()


def test_formula_error_is_arithmetic():
    assert issubclass(FormulaError, ArithmeticError)


GRIDS = {
    "staircase": [(m, k) for m in range(4) for k in range(1, 5)],
    "psyt": [(m, r, k) for m in range(3) for r in range(3) for k in range(1, 4)],
    "necorner": [(m, k) for m in range(1, 5) for k in range(m + 1)],
    "secondrow": [(m, k) for m in range(2, 5) for k in range(4)],
    "hole": [(m,) for m in range(6)],
}


@pytest.mark.parametrize(
    "name, params", [(name, p) for name, grid in GRIDS.items() for p in grid], ids=lambda v: str(v)
)
def test_family_matches_oracle(name, params):
    shape = FAMILY_SHAPES[name](*params)
    assert FAMILY_COUNTS[name](*params) == count_linear_extensions(shape.poset())


def test_match_family():
    assert match_family(parse_shape("rows:1,2,3")) == ("staircase", (0, 3))
    assert match_family(Partition((3, 2, 1))) is None
    assert match_family(parse_shape("psyt:1,2,3<2,3,4")) == ("psyt", (0, 1, 3))
    assert match_family(parse_shape("rows:3,3,3 hole:2,2")) == ("hole", (0,))
    assert match_family(parse_shape("rows:5,3,3 hole:2,2")) == ("hole", (2,))
    assert match_family(parse_shape("rows:4,3,4")) == ("secondrow", (4, 0))
    assert match_family(parse_shape("rows:1,2")) == ("staircase", (0, 2))
    assert product_count(parse_shape("rows:3,3,3 hole:2,2")) == 18
    with pytest.raises(ValueError):
        product_count(Partition((3, 2, 1)))


@pytest.mark.parametrize("name, params", [(name, p) for name, grid in GRIDS.items() for p in grid[:6]])
def test_family_shapes_round_trip_through_match(name, params):
    shape = FAMILY_SHAPES[name](*params)
    found = match_family(shape)
    assert found is not None
    assert FAMILY_COUNTS[found[0]](*found[1]) == FAMILY_COUNTS[name](*params)
