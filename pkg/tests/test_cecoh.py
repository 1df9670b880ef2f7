from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symplie.cecoh import (
    Module,
    NotARepresentation,
    apply_d,
    betti_numbers,
    ce_differential,
    cohomology_with_coeffs,
    d_one_forms,
    exact_primitive,
    in_cohomology_span,
    is_closed,
    is_exact,
    representatives,
)
from symplie.exterior import KForm, evaluate
from symplie.liealg import LieAlgebra, abelian, catalog, derived_algebra, is_unimodular
from symplie.linalg import matmul

from conftest import forms

GRID = ["R4", "rh3", "rr3", "rr3_lam:-1", "rr3_lam:0", "rr3_lam:1/2", "rr3p_gam:0", "rr3p_gam:1",
        "r2r2", "r2p", "n4", "r4", "r4_mu:0", "r4_mu:-1", "r4_mu:1/2", "r4_ab:-1,-1/2", "r4_ab:1/2,1",
        "r4p_gd:0,1", "r4p_gd:1/2,1", "d4", "d4_lam:1/2", "d4_lam:1", "d4_lam:3/4", "d4p_del:0",
        "d4p_del:1/2", "h4"]

AFF = LieAlgebra(2, {(1, 2): [0, 1]})
R2 = abelian(2)


def e(*idx, c=1):
    return KForm.basis_form(4, idx, c)


def unit(i, n=4):
    return [Fraction(int(k == i)) for k in range(1, n + 1)]


def d_by_formula(g, w):
    # d w(x0..xk) = sum_{i<j} (-1)^(i+j) w([xi, xj], x0, .., xk without xi, xj)
    k = w.degree
    coeffs = {}
    for idx in combinations(range(1, g.dim + 1), k + 1):
        xs = [unit(i, g.dim) for i in idx]
        total = Fraction(0)
        for i, j in combinations(range(k + 1), 2):
            rest = [x for t, x in enumerate(xs) if t not in (i, j)]
            val = evaluate(w, [g.bracket(xs[i], xs[j])] + rest).constant_value()
            total += (-1) ** (i + j) * val
        if total:
            coeffs[idx] = total
    return KForm(g.dim, k + 1, coeffs)


def test_rh3_one_forms():
    d = d_one_forms(catalog("rh3"))
    assert d[3] == {(1, 2): -1}
    assert d[1] == d[2] == d[4] == {}


def test_r2p_one_forms():
    d = d_one_forms(catalog("r2p"))
    assert d[3] == {(1, 3): -1, (2, 4): 1}
    assert d[4] == {(1, 4): -1, (2, 3): -1}


def test_abelian_differential_vanishes():
    for k in range(4):
        assert all(x == 0 for row in ce_differential(abelian(4), k).matrix for x in row)


@pytest.mark.parametrize("cid", GRID)
def test_d_squared_zero(cid):
    g = catalog(cid)
    for k in range(3):
        prod = matmul(ce_differential(g, k + 1).as_lists(), ce_differential(g, k).as_lists())
        assert all(x == 0 for row in prod for x in row)


@settings(max_examples=30)
@given(st.sampled_from(GRID), st.integers(1, 3), st.data())
def test_differential_matches_invariant_formula(cid, k, data):
    g = catalog(cid)
    w = data.draw(forms(4, k))
    assert apply_d(g, w) == d_by_formula(g, w)


def test_betti_rh3():
    assert betti_numbers(catalog("rh3")) == [1, 3, 4, 3, 1]


def test_betti_r2p():
    assert betti_numbers(catalog("r2p"))[1:4] == [2, 1, 0]


def test_betti_abelian():
    assert betti_numbers(abelian(4)) == [comb(4, k) for k in range(5)]


def test_exactness_rh3():
    g = catalog("rh3")
    eta = exact_primitive(g, e(1, 2))
    assert eta is not None and apply_d(g, eta) == e(1, 2)
    assert eta == e(3, c=-1)
    w = e(1, 4) + e(2, 3)
    assert is_closed(g, w) and not is_exact(g, w)


def test_zero_is_exact():
    g = catalog("d4")
    assert is_closed(g, KForm(4, 2)) and is_exact(g, KForm(4, 2))


def test_twisted_trivial_r2():
    dim, reps = cohomology_with_coeffs(R2, Module.trivial(R2, 2), 2)
    assert dim == 2 and len(reps) == 2


def test_twisted_r2_diag():
    mod = Module(R2, [[[0, 0], [0, 0]], [[0, 0], [0, 1]]])
    assert cohomology_with_coeffs(R2, mod, 2)[0] == 1


def test_twisted_aff():
    mod = Module(AFF, [[[1, 0], [0, 2]], [[0, 0], [1, 0]]])
    assert cohomology_with_coeffs(AFF, mod, 2)[0] == 1


def test_not_a_representation():
    with pytest.raises(NotARepresentation):
        Module(AFF, [[[1, 0], [0, 1]], [[0, 0], [1, 0]]])


def test_twisted_degree_zero_trivial():
    # invariants of the trivial module are everything
    assert cohomology_with_coeffs(R2, Module.trivial(R2, 3), 0)[0] == 3


@pytest.mark.parametrize("cid", GRID)
def test_betti_relations(cid):
    g = catalog(cid)
    b = betti_numbers(g)
    assert b[0] == 1
    assert sum((-1) ** k * x for k, x in enumerate(b)) == 0
    assert b[1] == 4 - derived_algebra(g).dim
    if is_unimodular(g):
        assert b == b[::-1]
    else:
        assert b[4] == 0


@pytest.mark.parametrize("cid", ["rh3", "r2p", "rr3_lam:-1", "d4_lam:1", "h4"])
def test_representatives_are_independent_classes(cid):
    g = catalog(cid)
    for k in (1, 2, 3):
        reps = representatives(g, k)
        assert len(reps) == betti_numbers(g)[k]
        for w in reps:
            assert is_closed(g, w) and not is_exact(g, w)
        if reps:
            assert in_cohomology_span(g, reps)
