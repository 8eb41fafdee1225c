from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lrstretch.errors import DuplicateAbscissa
from lrstretch.poly import ExactPolynomial, interpolate


def test_two_points():
    p = interpolate([(0, 1), (1, 2)])
    assert p.coefficients == (1, 1)
    assert str(p) == "t + 1"


def test_constant():
    assert interpolate([(0, 5)]).coefficients == (5,)
    p = interpolate([(0, 1), (1, 1), (2, 1)])
    assert p.coefficients == (1,) and p.degree == 0


def test_zero_polynomial():
    p = interpolate([(3, 0), (4, 0)])
    assert p.is_zero() and p.degree == -1 and str(p) == "0"


def test_duplicate_abscissa():
    with pytest.raises(DuplicateAbscissa):
        interpolate([(1, 2), (1, 3)])


def test_binomial_cubic():
    # C(t+3, 3): the k = 4 triple (5,4,2,1)/(3,2,1)/(3,2,1)
    p = interpolate([(t, v) for t, v in enumerate([1, 4, 10, 20])])
    assert p.coefficients == (1, Fraction(11, 6), 1, Fraction(1, 6))
    assert str(p) == "(1/6)*t^3 + t^2 + (11/6)*t + 1"
    assert p.coefficient_strings() == ["1/1", "11/6", "1/1", "1/6"]


def test_rendering_negative_terms():
    assert str(ExactPolynomial((3, -2, 0, -1))) == "-t^3 - 2*t + 3"


@given(st.lists(st.fractions(max_denominator=7), min_size=1, max_size=6),
       st.lists(st.integers(-20, 20), min_size=6, max_size=12, unique=True))
def test_recovers_polynomial(coeffs, xs):
    p = ExactPolynomial(tuple(coeffs))
    q = interpolate([(x, p(x)) for x in xs])
    assert q == p


@given(st.lists(st.tuples(st.integers(-30, 30), st.integers(-100, 100)), min_size=1, max_size=7, unique_by=lambda s: s[0]))
def test_reproduces_samples(samples):
    p = interpolate(samples)
    assert p.degree < len(samples)
    assert all(p(t) == v for t, v in samples)
