from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from symplie.construct import heisenberg
from symplie.liealg import (
    InvalidParameter,
    LieAlgebra,
    NotALieAlgebra,
    UnknownAlgebra,
    abelian,
    catalog,
    center,
    derivations,
    derived_algebra,
    derived_series,
    fingerprint,
    from_structure_constants,
    identify,
    is_derivation,
    is_unimodular,
    unflatten,
)
from symplie.linalg import det

from conftest import invertible_matrices

SAMPLE = ["rh3", "rr3_lam:1/2", "r2p", "n4", "r4_ab:-1/2,1/3", "d4_lam:3/4", "d4p_del:1/2", "h4"]


def e(i):
    return [Fraction(int(k == i)) for k in range(1, 5)]


def sympy_derivation_dim(g):
    # independent oracle: solve D[x,y] = [Dx,y] + [x,Dy] with sympy
    n = g.dim
    syms = sympy.symbols(f"d0:{n * n}")
    D = sympy.Matrix(n, n, syms)
    c = [[sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in g.bracket_basis(i, j)]) for j in range(1, n + 1)] for i in range(1, n + 1)]

    def br(u, v):
        return sum((u[i] * v[j] * c[i][j] for i in range(n) for j in range(n)), sympy.zeros(n, 1))

    eqs = []
    for i in range(n):
        for j in range(i + 1, n):
            lhs = D * c[i][j]
            rhs = br(D[:, i], sympy.eye(n)[:, j]) + br(sympy.eye(n)[:, i], D[:, j])
            eqs.extend(lhs - rhs)
    A, _ = sympy.linear_eq_to_matrix(eqs, syms)
    return n * n - A.rank()


def test_structure_constants_rh3():
    g = from_structure_constants(4, [(1, 2, 3, 1)])
    assert g.bracket(e(1), e(2)) == e(3)
    assert g == catalog("rh3")


def test_empty_table_is_abelian():
    g = from_structure_constants(4, [])
    assert g.is_abelian()
    assert g == abelian(4)


def test_jacobi_violation_is_reported():
    with pytest.raises(NotALieAlgebra) as err:
        from_structure_constants(4, [(1, 2, 3, 1), (4, 1, 1, 1), (4, 2, 2, 1)])
    assert set(err.value.triple) == {1, 2, 4}
    assert "Jacobi" in str(err.value)


def test_catalog_n4():
    g = catalog("n4")
    assert g.bracket(e(4), e(1)) == e(2)
    assert g.bracket(e(4), e(2)) == e(3)
    assert g.bracket(e(1), e(2)) == [0] * 4


def test_catalog_rr3_lam_zero():
    g = catalog("rr3_lam", lam=0)
    assert g.bracket(e(1), e(2)) == e(2)
    assert g.bracket(e(1), e(3)) == [0] * 4
    assert g == catalog("rr3_lam:0")


@pytest.mark.parametrize("cid", ["rr3_lam:2", "rr3p_gam:-1", "r4p_gd:0,0", "d4_lam:1/4", "d4p_del:-1", "r4_ab:1/2,1/3"])
def test_out_of_range_parameters(cid):
    with pytest.raises(InvalidParameter):
        catalog(cid)


def test_unknown_family():
    with pytest.raises(UnknownAlgebra):
        catalog("so3")


def test_center_rh3():
    z = center(catalog("rh3"))
    assert z.dim == 2
    assert z.contains(e(3)) and z.contains(e(4))


def test_derived_series_abelian():
    ds = derived_series(abelian(4))
    assert [s.dim for s in ds] == [4, 0]


def test_derived_n4():
    d = derived_algebra(catalog("n4"))
    assert d.dim == 2
    assert d.contains(e(2)) and d.contains(e(3))


@pytest.mark.parametrize("cid,expected", [("n4", True), ("r2r2", False), ("R4", True), ("rh3", True), ("rr3", False)])
def test_unimodular(cid, expected):
    assert is_unimodular(catalog(cid)) is expected


def test_derivations_abelian():
    assert derivations(abelian(4)).dim == 16


def test_derivations_rh3():
    assert derivations(catalog("rh3")).dim == 10


@pytest.mark.parametrize("cid", SAMPLE)
def test_derivation_dim_matches_sympy(cid):
    g = catalog(cid)
    assert derivations(g).dim == sympy_derivation_dim(g)


def test_heisenberg_derivation_shape():
    h = heisenberg(2)
    space = derivations(h)
    assert space.dim == 2 * 4 + 3 * 2 + 1
    for v in space.basis:
        d = unflatten(v, 5)
        assert is_derivation(h, d)
        lam = d[4][4]
        # the last basis vector is an eigenvector
        assert all(d[i][4] == 0 for i in range(4))
        for i in (0, 2):
            assert d[i][i] + d[i + 1][i + 1] == lam


def test_fingerprint_rh3():
    fp = fingerprint(catalog("rh3"))
    assert fp.dim_center == 2
    assert fp.betti == (3, 4, 3)
    assert fp.dim_der == 10


def test_fingerprint_abelian():
    fp = fingerprint(abelian(4))
    assert fp.dim_derived == 0
    assert fp.dim_center == 4
    assert fp.unimodular
    assert fp.betti == (4, 6, 4)
    assert fp.dim_der == 16
    assert fp.nilradical_dim == 4
    assert fp.ad_spectrum_key is None


def test_identify_round_trip():
    assert str(identify(catalog("n4"))) == "n4"


def test_identify_conjugated():
    p = [[1, 2, 0, 1], [0, 1, -1, 0], [3, 0, 1, 1], [1, 1, 0, 2]]
    assert det(p) != 0
    g = catalog("d4_lam:3/4").change_basis(p)
    assert str(identify(g)) == "d4_lam:3/4"


def test_identify_same_algebra_pair():
    assert str(identify(catalog("r4_ab:-1,0"))) == "rr3_lam:-1"


def test_identify_rejects_other_dims():
    with pytest.raises(ValueError):
        identify(abelian(3))


def test_json_round_trip():
    g = catalog("d4p_del:1/2")
    assert LieAlgebra.from_json(g.to_json()) == g


@settings(max_examples=15)
@given(st.sampled_from(SAMPLE), invertible_matrices(4))
def test_conjugation_keeps_jacobi_and_fingerprint(cid, p):
    g = catalog(cid)
    h = g.change_basis(p)
    assert h.jacobi_violation() is None
    assert fingerprint(h) == fingerprint(g)


@settings(max_examples=20)
@given(st.sampled_from(SAMPLE + ["R4", "rr3", "r4", "d4"]))
def test_b1_is_codim_of_derived(cid):
    g = catalog(cid)
    assert fingerprint(g).betti[0] == g.dim - derived_algebra(g).dim


@settings(max_examples=20)
@given(st.lists(st.integers(-2, 2), min_size=16, max_size=16))
def test_derivations_are_derivations(entries):
    g = catalog("r4_mu:1/2")
    space = derivations(g)
    coeffs = entries[: space.dim]
    v = [sum((Fraction(c) * b[k] for c, b in zip(coeffs, space.basis)), Fraction(0)) for k in range(16)]
    assert is_derivation(g, unflatten(v, 4))
