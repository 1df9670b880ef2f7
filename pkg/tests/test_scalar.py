from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from symplie.scalar import MissingAssignment, Poly, Q, fmt, parse_poly, poly_eval, poly_is_zero, rational_sqrt

from conftest import rationals


def test_coercions():
    assert Q("-3/4") == Fraction(-3, 4)
    assert Q(" 2 ") == 2
    assert fmt(Fraction(6, 4)) == "3/2"
    assert fmt(Fraction(-4, 2)) == "-2"
    with pytest.raises(TypeError):
        Q(True)
    with pytest.raises(TypeError):
        Q(0.5)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(2) is None
    assert rational_sqrt(-1) is None


@pytest.mark.parametrize(
    "text, zero",
    [
        ("0", True),
        ("a14*a23 - a13*a24", False),
        ("(x+y)^2 - x^2 - 2*x*y - y^2", True),
        ("x*y - y*x", True),
    ],
)
def test_poly_is_zero(text, zero):
    assert poly_is_zero(parse_poly(text)) is zero


def test_eval_examples():
    assert poly_eval(parse_poly("a12*a34"), {"a12": 1, "a34": 1}) == 1
    rh3 = parse_poly("a14*a23 - a13*a24")
    assert rh3.eval({"a14": 1, "a23": 1, "a13": 0, "a24": 0}) == 1
    assert parse_poly("x^2").eval({"x": Fraction(3, 2)}) == Fraction(9, 4)


def test_eval_missing_variable():
    with pytest.raises(MissingAssignment):
        parse_poly("x*y").eval({"x": 1})


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_poly("x + $")


def test_parse_matches_sympy():
    text = "3/2*a^2*b - (a - b)^3 + 7"
    ours = parse_poly(text)
    a, b = sp.symbols("a b")
    ref = sp.expand(sp.Rational(3, 2) * a**2 * b - (a - b) ** 3 + 7)
    for av, bv in [(0, 0), (1, 2), (-3, 5), (Fraction(1, 2), Fraction(-2, 3))]:
        assert ours.eval({"a": av, "b": bv}) == ref.subs({a: sp.Rational(av), b: sp.Rational(bv)})


def test_subs_and_division():
    p = parse_poly("x^2 + y")
    assert p.subs({"y": parse_poly("x")}) == parse_poly("x^2 + x")
    assert (p / 2).eval({"x": 2, "y": 0}) == 2
    assert parse_poly("1/(1/2 + 1/2)").constant_value() == 1


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert Q(Fraction(a.numerator, a.denominator)) == a


polys = st.lists(st.tuples(st.integers(-3, 3), st.integers(0, 2), st.integers(0, 2)), max_size=5).map(
    lambda ts: sum((Poly.const(c) * Poly.var("x") ** i * Poly.var("y") ** j for c, i, j in ts), Poly())
)


@given(polys, polys, rationals, rationals)
def test_eval_is_multiplicative(p, q, x, y):
    s = {"x": x, "y": y}
    assert (p * q).eval(s) == p.eval(s) * q.eval(s)
    assert (p + q).eval(s) == p.eval(s) + q.eval(s)
