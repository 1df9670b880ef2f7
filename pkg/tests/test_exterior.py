from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symplie.exterior import (
    KForm,
    basis,
    evaluate,
    generic_two_form,
    parse_form,
    power,
    sort_sign,
    volume_coefficient,
    wedge,
)
from symplie.scalar import parse_poly

from conftest import forms


def e(*idx, dim=4, c=1):
    return KForm.basis_form(dim, idx, c)


def test_basic_wedges():
    assert wedge(e(1), e(2)) == e(1, 2)
    assert wedge(e(1), e(1)).is_zero()
    assert wedge(e(2), e(1)) == e(1, 2) * -1


def test_rh3_normal_form_square():
    w = e(1, 4) + e(2, 3)
    assert wedge(w, w) == e(1, 2, 3, 4, c=2)


def test_powers():
    assert power(e(1, 2) + e(3, 4), 2) == e(1, 2, 3, 4, c=2)
    assert power(e(1, 2), 2).is_zero()
    top = volume_coefficient(power(generic_two_form(4), 2))
    assert top == parse_poly("2*a12*a34 - 2*a13*a24 + 2*a14*a23")


@pytest.mark.parametrize("n", range(1, 7))
def test_basis_sizes(n):
    for k in range(n + 1):
        assert len(basis(n, k)) == comb(n, k)


def test_sort_sign():
    assert sort_sign([2, 1, 3]) == (-1, (1, 2, 3))
    assert sort_sign([3, 1, 2]) == (1, (1, 2, 3))
    assert sort_sign([1, 1]) == (0, None)


def test_evaluate_determinant_convention():
    assert evaluate(e(1, 2), [[1, 0, 0, 0], [0, 1, 0, 0]]).constant_value() == 1
    assert evaluate(e(1, 2), [[0, 1, 0, 0], [1, 0, 0, 0]]).constant_value() == -1


def test_parse_form():
    w = parse_form("a12*e1^e2 - delta*e3^e4", 4)
    assert w.coeff((1, 2)) == parse_poly("a12")
    assert w.coeff((3, 4)) == parse_poly("-delta")
    v = parse_form("a12*e1^e2 - delta*e3^e4", 4, {"a12": 2, "delta": Fraction(1, 2)})
    assert v == e(1, 2, c=2) - e(3, 4, c=Fraction(1, 2))
    assert parse_form("e1 - 2*e3", 4) == e(1) - e(3, c=2)
    assert parse_form("e2^e1^e3", 4) == e(1, 2, 3) * -1
    assert parse_form("(a+1)*e1^e2 + e1^e2", 4).coeff((1, 2)) == parse_poly("a + 2")


def _shuffle_oracle(a: KForm, b: KForm, vectors):
    """(a^b)(v_1..v_{k+l}) = sum over (k,l)-shuffles of sign * a(..) b(..)."""
    k, l = a.degree, b.degree
    total = Fraction(0)
    idx = list(range(k + l))
    for first in combinations(idx, k):
        rest = [i for i in idx if i not in first]
        perm = list(first) + rest
        inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
        sign = -1 if inv % 2 else 1
        total += sign * evaluate(a, [vectors[i] for i in first]).constant_value() * evaluate(
            b, [vectors[i] for i in rest]
        ).constant_value()
    return total


vectors4 = st.lists(st.lists(st.integers(-2, 2), min_size=4, max_size=4), min_size=3, max_size=3)


@given(forms(4, 1), forms(4, 2), vectors4)
def test_wedge_against_shuffle_formula(a, b, vs):
    assert evaluate(wedge(a, b), vs).constant_value() == _shuffle_oracle(a, b, vs)


@given(forms(5, 1), forms(5, 2), forms(5, 2))
def test_wedge_associative(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@given(forms(5, 2), forms(5, 1), forms(5, 1), st.integers(-3, 3))
def test_wedge_bilinear(a, b, c, s):
    assert wedge(a, b + c * s) == wedge(a, b) + wedge(a, c) * s


@given(forms(5, 1), forms(5, 2), forms(5, 3))
def test_graded_commutativity(a, b, c):
    assert wedge(a, b) == wedge(b, a) * (-1) ** (1 * 2)
    assert wedge(a, c) == wedge(c, a) * (-1) ** (1 * 3)
    assert wedge(b, c) == wedge(c, b) * (-1) ** (2 * 3)


def test_skew_matrix_round_trip():
    w = e(1, 2, c=3) - e(2, 4)
    m = w.to_skew_matrix()
    assert m[0][1] == 3 and m[1][0] == -3 and m[3][1] == 1
    assert KForm.from_skew_matrix(m) == w


def test_json_round_trip():
    w = e(1, 3) + e(2, 4, c=Fraction(-1, 2))
    assert KForm.from_json(4, w.to_json()) == w
