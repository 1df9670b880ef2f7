from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symplie.cecoh import Module, NotARepresentation
from symplie.construct import (
    CotangentData,
    DoubleExtData,
    IncompatibleDerivation,
    NotACocycle,
    NotADerivation,
    NotReducible,
    abelian_semidirect,
    central_extension_class,
    check_cotangent_conditions,
    cotangent_extension,
    derivation_extension,
    double_extension,
    heisenberg,
    heisenberg_extension,
    is_solution,
    nilpotent_chain,
    semidirect,
    sequence_split_check,
    symplectic_reduction,
    trivial_extension,
)
from symplie.exterior import KForm
from symplie.liealg import LieAlgebra, abelian, catalog, derivations, identify
from symplie.linalg import Subspace
from symplie.reproduce import solution_up_to_equivalence
from symplie.symplectic import admits_symplectic, is_symplectic_form, omega_orthogonal

from conftest import small_ints

AFF = LieAlgebra(2, {(1, 2): [0, 1]})
R2 = abelian(2)
ZERO2 = [[0, 0], [0, 0]]


def diag(*xs):
    return [[x if i == j else 0 for j in range(len(xs))] for i, x in enumerate(xs)]


def span(n, *idx):
    return Subspace.span_of_basis_vectors(n, idx)


def f12():
    return KForm.basis_form(2, (1, 2))


def test_conditions_trivial_r2():
    data = CotangentData(R2, Module.trivial(R2, 2), {(1, 2): [1, 0]})
    flags = check_cotangent_conditions(data)
    assert flags["lie"] and flags["coborde"]


def test_coadjoint_aff_fails_coboundary():
    # coadjoint: x.phi = -phi o ad_x
    ad = [AFF.ad_basis(1), AFF.ad_basis(2)]
    coad = [[[-m[j][i] for j in range(2)] for i in range(2)] for m in ad]
    data = CotangentData(AFF, Module(AFF, coad))
    assert check_cotangent_conditions(data)["coborde"] is False


def test_aff_starred_row():
    # the literal datum fails the coboundary condition; its algebra has a solution datum
    data = CotangentData(AFF, Module(AFF, [diag(1, 2), [[0, 0], [1, 0]]]))
    assert check_cotangent_conditions(data) == {"lie": True, "bianchi": True, "coborde": False}
    g = cotangent_extension(data)[0]
    assert str(identify(g)) == "d4_lam:1/2"
    assert solution_up_to_equivalence(g)


def test_cotangent_rh3():
    data = CotangentData(R2, Module.trivial(R2, 2), {(1, 2): [1, 0]})
    g, w, sol = cotangent_extension(data)
    assert sol
    assert str(identify(g)) == "rh3"
    assert is_symplectic_form(g, w)


def test_cotangent_r2r2():
    data = CotangentData(R2, Module(R2, [diag(1, 0), diag(0, 1)]))
    g, w, sol = cotangent_extension(data)
    assert sol
    assert str(identify(g)) == "r2r2"


def test_cotangent_r4_mu_not_solution():
    half = Fraction(1, 2)
    data = CotangentData(AFF, Module(AFF, [[[half, 1], [0, half]], ZERO2]))
    g, w, sol = cotangent_extension(data)
    assert not sol
    assert str(identify(g)) == "r4_mu:1/2"


def test_cotangent_rejects_non_cocycle():
    # on R^3 with x1 acting by diag(1, 0, 0), alpha(x2, x3) = f1 breaks the cocycle identity
    h = abelian(3)
    data = CotangentData(h, Module(h, [diag(1, 0, 0), diag(0, 0, 0), diag(0, 0, 0)]), {(2, 3): [1, 0, 0]})
    assert check_cotangent_conditions(data)["lie"] is False
    with pytest.raises(NotACocycle):
        cotangent_extension(data)


@settings(max_examples=40)
@given(st.lists(small_ints, min_size=4, max_size=4), st.lists(small_ints, min_size=2, max_size=2))
def test_is_solution_iff_closed(eigs, alpha):
    a, b, c, d = eigs
    data = CotangentData(R2, Module(R2, [diag(a, b), diag(c, d)]), {(1, 2): alpha})
    g, w, closed = cotangent_extension(data)
    assert is_solution(data) is closed
    # h* is an abelian ideal
    dual = span(4, 1, 2)
    assert g.is_ideal(dual) and g.is_abelian_subspace(dual)


def test_semidirect_r4_ab():
    g = semidirect(abelian(1), 3, [diag(1, -1, Fraction(-1, 2))])
    assert g == catalog("r4_ab:-1,-1/2")


def test_semidirect_trivial_action():
    g = semidirect(abelian(1), 3, [diag(0, 0, 0)])
    assert g.is_abelian()


def test_semidirect_chain_is_n4():
    chain = [[0, 0, 0], [1, 0, 0], [0, 1, 0]]
    g = semidirect(abelian(1), 3, [chain])
    assert g == catalog("n4")


def test_semidirect_bad_action():
    with pytest.raises(NotARepresentation):
        semidirect(AFF, 2, [diag(1, 1), [[0, 1], [0, 0]]])


def test_double_extension_trivial():
    alg, w = double_extension(DoubleExtData(R2, f12(), ZERO2, [0, 0]))
    assert alg.is_abelian()
    assert is_symplectic_form(alg, w)


def test_double_extension_n4():
    alg, w = double_extension(DoubleExtData(R2, f12(), [[0, 1], [0, 0]], [0, 1]))
    assert str(identify(alg)) == "n4"
    assert is_symplectic_form(alg, w)


def test_double_extension_incompatible():
    with pytest.raises(IncompatibleDerivation) as err:
        double_extension(DoubleExtData(R2, f12(), diag(1, 1), [0, 0]))
    assert 1 in err.value.triple


def test_double_extension_e_is_central():
    alg, w = double_extension(DoubleExtData(R2, f12(), [[0, 1], [0, 0]], [0, 1]))
    e = [0, 0, 0, 1]
    assert all(not any(alg.bracket(e, u)) for u in Subspace.full(4).basis)


@pytest.mark.parametrize("delta", ["1/2", "1", "2"])
def test_reduction_r4p(delta):
    g = catalog(f"r4p_gd:0,{delta}")
    w = admits_symplectic(g)[1].form
    small = span(4, 1)
    quot, wr, reps = symplectic_reduction(g, w, small)
    assert quot.dim == 2 and quot.is_abelian()
    assert not wr.is_zero()
    perp = omega_orthogonal(g, w, small)
    assert sequence_split_check(g, perp)
    assert central_extension_class(g, small, perp)[1] is True


@pytest.mark.parametrize("delta", ["1/2", "1", "2"])
def test_reduction_d4p(delta):
    g = catalog(f"d4p_del:{delta}")
    w = admits_symplectic(g)[1].form
    small = span(4, 3)
    quot, wr, reps = symplectic_reduction(g, w, small)
    assert quot.dim == 2 and quot.is_abelian()
    perp = omega_orthogonal(g, w, small)
    assert sequence_split_check(g, perp)
    phi, trivial = central_extension_class(g, small, perp)
    assert not phi.is_zero() and trivial is False


def test_reduction_abelian():
    w = KForm.basis_form(4, (1, 2)) + KForm.basis_form(4, (3, 4))
    quot, wr, reps = symplectic_reduction(abelian(4), w, span(4, 1))
    assert quot.dim == 2 and quot.is_abelian()
    assert len(wr.coeffs) == 1


def test_reduction_needs_ideal():
    w = KForm.basis_form(4, (1, 4)) + KForm.basis_form(4, (2, 3))
    with pytest.raises(NotReducible):
        symplectic_reduction(catalog("rh3"), w, span(4, 1))


def test_split_vacuous():
    g = catalog("d4")
    assert sequence_split_check(g, Subspace.full(4))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_heisenberg_derivation_dim(n):
    h = heisenberg(n)
    assert h.dim == 2 * n + 1
    assert derivations(h).dim == 2 * n * n + 3 * n + 1


def test_trivial_extension_h3_is_rh3():
    g = trivial_extension(heisenberg(1))
    assert str(identify(g)) == "rh3"
    assert admits_symplectic(g)[0]


def test_heisenberg_extension_alternating_diag():
    g = heisenberg_extension(diag(1, -1, -1, 1), 0)
    assert g.dim == 6
    assert admits_symplectic(g)[0] is False


def test_heisenberg_extension_not_derivation():
    with pytest.raises(NotADerivation):
        derivation_extension(heisenberg(1), diag(1, 1, 1))


def test_abelian_semidirect_eigs():
    g = abelian_semidirect([1, 2, 3])
    assert g.dim == 4
    assert admits_symplectic(g)[0] is False


def test_nilpotent_chain():
    assert str(identify(nilpotent_chain(4))) == "n4"
    assert admits_symplectic(nilpotent_chain(4))[0]


def test_nilpotent_chain_six_is_symplectic():
    # basis e0, e1..e5; closed and nondegenerate
    g = nilpotent_chain(6)
    w = KForm.basis_form(6, (1, 2)) + KForm.basis_form(6, (3, 6)) - KForm.basis_form(6, (4, 5))
    assert is_symplectic_form(g, w)
