from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import DATA
from macdual import DualFunctional, Polynomial, parse_polynomial, parse_system
from macdual.exceptions import ParseError
from macdual.io import (
    format_functional,
    format_polynomial,
    functional_from_json,
    functional_to_json,
    scalar_from_json,
    scalar_to_json,
)

NAMES = ["x", "y", "z"]


def test_parse_cusp_file():
    sf = parse_system((DATA / "cusp.txt").read_text())
    assert sf.names == ["x", "y", "z"] and sf.point is None and sf.mode == "exact"
    assert len(sf.ideal.generators) == 2


def test_parse_cyclic4_point_is_approximately_i():
    sf = parse_system((DATA / "cyclic4.txt").read_text())
    assert sf.mode == "complex"
    assert max(abs(complex(p) - t) for p, t in zip(sf.point, [1j, 1j, -1j, -1j])) < 1e-15


def test_comments_and_mode_line():
    sf = parse_system("# test\nvars a b\nmode complex\na*b  # product\n")
    assert sf.mode == "complex"
    assert not sf.ideal.is_exact


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("vars x\n0", 2, 1),
        ("vars x y\nx + w", 2, 5),
        ("vars x\nx^^2", 2, 3),
        ("vars x x\nx", 1, 1),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as exc:
        parse_system(text)
    assert (exc.value.line, exc.value.column) == (line, column)


def test_empty_generator_list():
    with pytest.raises(ParseError):
        parse_system("vars x\n")


def test_complex_literals():
    f = parse_polynomial("(1+2i)*x - (0.5-1i)", ["x"])
    assert f.terms == {(1,): 1 + 2j, (0,): -0.5 + 1j}


coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=9).filter(lambda c: c != 0)
exps = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
polys = st.dictionaries(exps, coeffs, min_size=1, max_size=6).map(lambda d: Polynomial(d, 3))


@settings(max_examples=150, deadline=None)
@given(polys)
def test_format_parse_round_trip(f):
    assert parse_polynomial(format_polynomial(f, NAMES), NAMES) == f


@settings(max_examples=100, deadline=None)
@given(st.lists(polys, min_size=1, max_size=3))
def test_system_round_trip(gens):
    text = "vars x y z\n" + "\n".join(format_polynomial(g, NAMES) for g in gens)
    again = parse_system(text)
    text2 = "vars x y z\n" + "\n".join(format_polynomial(g, NAMES) for g in again.ideal.generators)
    assert again.ideal.generators == tuple(gens) or list(again.ideal.generators) == gens
    assert text == text2


def test_scalar_json():
    assert scalar_to_json(Fraction(-3, 4)) == {"re": "-3/4", "im": "0"}
    assert scalar_from_json({"re": "-3/4", "im": "0"}) == Fraction(-3, 4)
    assert scalar_from_json(scalar_to_json(1.5 - 2j)) == 1.5 - 2j


def test_functional_json_round_trip():
    q = DualFunctional({(1, 0, 1): Fraction(1, 2), (0, 1, 0): 2}, 3)
    assert functional_from_json(functional_to_json(q), 3).terms == q.terms
    assert format_functional(q, NAMES) == "2*D[y] + 1/2*D[x*z]"
