from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ideal_of
from macdual import Ideal, Polynomial, apply_linear_change, translate_to_point, truncate
from macdual.dual import truncated_dual_direct
from macdual.exceptions import (
    DimensionMismatchError,
    InputError,
    PointNotOnVarietyError,
    SingularMatrixError,
)
from macdual.poly import exponents_of_degree, exponents_up_to

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exps2 = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys2 = st.dictionaries(exps2, small, max_size=5).map(lambda d: Polynomial(d, 2))


def test_exponent_enumeration_counts():
    assert len(exponents_of_degree(3, 2)) == 6
    assert len(exponents_up_to(3, 2)) == 10
    assert exponents_up_to(2, 0) == [(0, 0)]


def test_arithmetic_and_degree():
    x, y = Polynomial.variable(0, 2), Polynomial.variable(1, 2)
    f = (x + y) ** 2
    assert f.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert f.degree() == 2 and f.valuation() == 2 and f.is_homogeneous()
    assert (f - f).is_zero()
    assert f([Fraction(1), Fraction(2)]) == 9


def test_truncate_keeps_low_degree():
    x = Polynomial.variable(0, 1)
    f = x + x**2 + x**3
    assert truncate(f, 2).terms == {(1,): 1, (2,): 1}
    assert truncate(f, 0).is_zero()


def test_zero_generator_rejected():
    with pytest.raises(InputError):
        Ideal([Polynomial.zero(2)], 2)


def test_mixed_nvars_rejected():
    with pytest.raises(DimensionMismatchError):
        Ideal([Polynomial.variable(0, 2), Polynomial.variable(0, 3)], 2)


def test_translate_point_not_on_variety():
    I = ideal_of(["x - 1"], ["x"])
    with pytest.raises(PointNotOnVarietyError):
        I.translate([0])
    assert I.translate([1]).generators[0].terms == {(1,): 1}


def test_translate_complex_tolerance():
    f = Polynomial({(1,): 1, (0,): -1j}, 1)
    g = translate_to_point(f, [1j + 1e-12], check=True)
    assert g.constant_term() == 0


@settings(max_examples=60, deadline=None)
@given(polys2, st.tuples(small, small))
def test_translate_round_trip(f, y):
    back = translate_to_point(translate_to_point(f, y), [-c for c in y])
    assert back == f


@settings(max_examples=60, deadline=None)
@given(polys2, polys2, polys2)
def test_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)


def test_singular_change_rejected():
    I = ideal_of(["x*y"], ["x", "y"])
    with pytest.raises(SingularMatrixError):
        apply_linear_change(I, [[1, 1], [2, 2]])


@pytest.mark.parametrize("matrix", [[[1, 2], [0, 1]], [[0, 1], [1, 0]], [[2, -1], [1, 1]]])
def test_dual_dimension_invariant_under_linear_change(matrix):
    I = ideal_of(["x^2", "x*y^2"], ["x", "y"])
    J = apply_linear_change(I, matrix)
    for k in range(5):
        assert truncated_dual_direct(I, k).dim == truncated_dual_direct(J, k).dim
