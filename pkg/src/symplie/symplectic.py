"""Closed 2-forms, symplectic existence and the lagrangian machinery."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .cecoh import coboundaries, cocycles, is_closed
from .exterior import KForm, basis, evaluate, power, volume_coefficient
from .liealg import (
    LieAlgebra,
    center,
    derived_series,
    lower_central_series,
    nilradical,
)
from .linalg import (
    SingularMap,
    Subspace,
    det,
    inverse,
    matmul,
    matvec,
    nullspace,
    rref,
    transpose,
)
from .scalar import Poly, Q


class OddDimension(ValueError):
    pass


class DegenerateForm(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def _var_name(idx: tuple, n: int) -> str:
    sep = "_" if n > 9 else ""
    return "a" + sep.join(str(i) for i in idx)


@dataclass(frozen=True)
class ClosedFormSpace:
    """Closed 2-forms of g as an echelon basis.

    The generic element has one variable per basis form, named after its
    pivot: the form with leading term e^1^e^3 carries ``a13``.
    """

    algebra: LieAlgebra
    basis: tuple
    variables: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def generic_element(self) -> KForm:
        out = KForm(self.algebra.dim, 2)
        for v, b in zip(self.variables, self.basis):
            out = out + b * Poly.var(v)
        return out

    def form_at(self, values) -> KForm:
        """The member with the given coordinates (a sequence or a name map)."""
        if isinstance(values, dict):
            values = [values.get(v, 0) for v in self.variables]
        out = KForm(self.algebra.dim, 2)
        for c, b in zip(values, self.basis):
            if c:
                out = out + b * Q(c)
        return out

    def contains(self, w: KForm) -> bool:
        return self.as_subspace().contains(w.to_vector())

    def as_subspace(self) -> Subspace:
        n = self.algebra.dim
        return Subspace(len(basis(n, 2)), [b.to_vector() for b in self.basis])


def _form_space(g: LieAlgebra, vectors: list) -> ClosedFormSpace:
    n = g.dim
    rows, piv = rref(vectors) if vectors else ([], [])
    idx2 = basis(n, 2)
    forms = tuple(KForm.from_vector(n, 2, r) for r in rows)
    names = tuple(_var_name(idx2[p], n) for p in piv)
    return ClosedFormSpace(g, forms, names)


def closed_two_forms(g: LieAlgebra) -> ClosedFormSpace:
    return _form_space(g, cocycles(g, 2))


def exact_two_forms(g: LieAlgebra) -> ClosedFormSpace:
    return _form_space(g, coboundaries(g, 2))


def pfaffian(m: list) -> Poly:
    """Pfaffian of a skew matrix with Poly or rational entries (expansion on the first row)."""
    n = len(m)
    if n % 2:
        raise OddDimension(f"Pfaffian of a {n}x{n} matrix")
    if n == 0:
        return Poly.const(1)
    total = Poly()
    rest_all = list(range(1, n))
    for pos, j in enumerate(rest_all):
        a = Poly.lift(m[0][j])
        if a.is_zero():
            continue
        keep = [k for k in rest_all if k != j]
        sub = [[m[r][c] for c in keep] for r in keep]
        term = a * pfaffian(sub)
        total = total + (term if pos % 2 == 0 else -term)
    return total


def form_pfaffian(w: KForm) -> Poly:
    if w.dim % 2:
        raise OddDimension(f"dimension {w.dim} is odd")
    return pfaffian(w.to_skew_matrix())


def pfaffian_via_power(w: KForm) -> Poly:
    """Coefficient of the volume form in w^k / k!; agrees with form_pfaffian."""
    from math import factorial

    if w.dim % 2:
        raise OddDimension(f"dimension {w.dim} is odd")
    k = w.dim // 2
    return volume_coefficient(power(w, k)) / factorial(k)


def pfaffian_on_closed(g: LieAlgebra, space: ClosedFormSpace | None = None) -> Poly:
    if g.dim % 2:
        raise OddDimension(f"dimension {g.dim} is odd")
    space = space or closed_two_forms(g)
    return form_pfaffian(space.generic_element)


@dataclass(frozen=True)
class SymplecticWitness:
    form: KForm
    pfaffian_value: Fraction


def _search_witness(space: ClosedFormSpace, pf: Poly, seed: int = 0):
    """A grid point where pf does not vanish, scanning boxes of growing width.

    Small spaces are scanned exhaustively; larger ones are sampled with a
    fixed seed. A nonzero pf of degree d vanishes on at most a d/(2w+1)
    fraction of the box of half-width w, so this terminates.
    """
    names = space.variables
    m = len(names)
    # unit vectors and pairs first: these give the readable witnesses
    for point in _simple_points(m):
        val = pf.eval(dict(zip(names, point)))
        if val:
            return point, val
    rng = random.Random(seed)
    width = 3
    while True:
        if (2 * width + 1) ** m <= 5000:
            points = product(range(-width, width + 1), repeat=m)
        else:
            points = ([rng.randint(-width, width) for _ in range(m)] for _ in range(2000))
        for point in points:
            val = pf.eval(dict(zip(names, point)))
            if val:
                return list(point), val
        width *= 2


def _simple_points(m: int):
    for i in range(m):
        yield [int(k == i) for k in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            yield [int(k in (i, j)) for k in range(m)]


def _witness_for(space: ClosedFormSpace):
    if space.dim == 0:
        return None
    pf = form_pfaffian(space.generic_element)
    if pf.is_zero():
        return None
    point, val = _search_witness(space, pf)
    return SymplecticWitness(space.form_at(point), val)


def admits_symplectic(g: LieAlgebra):
    """(bool, SymplecticWitness or None)."""
    if g.dim % 2:
        raise OddDimension(f"dimension {g.dim} is odd")
    w = _witness_for(closed_two_forms(g))
    return w is not None, w


def exact_symplectic(g: LieAlgebra):
    """(bool, witness) for symplectic forms of the shape d(eta)."""
    if g.dim % 2:
        raise OddDimension(f"dimension {g.dim} is odd")
    w = _witness_for(exact_two_forms(g))
    return w is not None, w


def is_symplectic_form(g: LieAlgebra, w: KForm) -> bool:
    if g.dim % 2 or not w.is_constant():
        return False
    return is_closed(g, w) and not form_pfaffian(w).is_zero()


def omega_matrix(w: KForm) -> list:
    return w.to_skew_matrix()


def omega_value(w: KForm, x, y) -> Fraction:
    return evaluate(w, [x, y]).constant_value()


def omega_orthogonal(g: LieAlgebra, w: KForm, sub: Subspace) -> Subspace:
    m = omega_matrix(w)
    if det(m) == 0:
        raise DegenerateForm("the 2-form is degenerate")
    n = g.dim
    if not sub.basis:
        return Subspace.full(n)
    rows = [matvec(m, v) for v in sub.basis]
    # x^T M v = 0  <=>  (M v) . x = 0
    return Subspace(n, nullspace(rows, n))


def is_isotropic(w: KForm, sub: Subspace) -> bool:
    m = omega_matrix(w)
    return all(not sum(a * b for a, b in zip(u, matvec(m, v))) for u in sub.basis for v in sub.basis)


def is_lagrangian(w: KForm, sub: Subspace) -> bool:
    return 2 * sub.dim == w.dim and is_isotropic(w, sub)


def pullback(sigma: list, w: KForm) -> KForm:
    """(sigma* w)(x, y) = w(sigma x, sigma y)."""
    s = [[Q(x) for x in r] for r in sigma]
    if det(s) == 0:
        raise SingularMap("pullback along a singular map")
    m = omega_matrix(w) if w.is_constant() else None
    if m is None:
        raise ValueError("pullback needs a constant form")
    return KForm.from_skew_matrix(matmul(transpose(s), matmul(m, s)))


def is_automorphism(g: LieAlgebra, sigma: list) -> bool:
    s = [[Q(x) for x in r] for r in sigma]
    n = g.dim
    if len(s) != n or any(len(r) != n for r in s) or det(s) == 0:
        return False
    cols = transpose(s)
    for i in range(n):
        for j in range(i + 1, n):
            lhs = matvec(s, g.bracket_basis(i + 1, j + 1))
            if lhs != g.bracket(cols[i], cols[j]):
                return False
    return True


# ---------------------------------------------------------------------------
# isotropic and lagrangian ideals
# ---------------------------------------------------------------------------


def _characteristic_subspaces(g: LieAlgebra) -> list:
    n = g.dim
    from .liealg import derived_algebra

    base = [center(g), nilradical(g)]
    base += derived_series(g) + lower_central_series(g)
    der = derived_algebra(g)
    # centralizer of the derived algebra
    rows = []
    for v in der.basis:
        ad = g.ad(v)
        rows += [list(r) for r in ad]
    base.append(Subspace(n, nullspace(rows, n)) if rows else Subspace.full(n))
    seen = []
    for s in base:
        if s not in seen:
            seen.append(s)
    # close under sums and intersections
    changed = True
    while changed:
        changed = False
        for a in list(seen):
            for b in list(seen):
                for c in (a + b, a.intersect(b)):
                    if c not in seen:
                        seen.append(c)
                        changed = True
    return seen


def _eigen_ideals(g: LieAlgebra) -> list:
    """Ideals generated by rational eigenvectors of ad of basis elements."""
    from .linalg import identity, msub, mscale
    from .liealg import rational_roots
    from .linalg import charpoly

    n = g.dim
    out = []
    for i in range(1, n + 1):
        ad = g.ad_basis(i)
        roots, _ = rational_roots(charpoly(ad))
        for r in set(roots):
            for v in nullspace(msub(ad, mscale(r, identity(n))), n):
                out.append(generated_ideal(g, [v]))
    return out


def generated_ideal(g: LieAlgebra, vectors: list) -> Subspace:
    n = g.dim
    cur = Subspace(n, vectors)
    while True:
        new = cur.basis + [g.bracket(g_e, v) for v in cur.basis for g_e in _units(n)]
        nxt = Subspace(n, new)
        if nxt == cur:
            return cur
        cur = nxt


def _units(n):
    return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]


def candidate_ideals(g: LieAlgebra, extra=()) -> list:
    n = g.dim
    cands = []
    for s in _characteristic_subspaces(g) + _eigen_ideals(g) + [Subspace(n, e.basis if isinstance(e, Subspace) else e) for e in extra]:
        if 0 < s.dim < n and g.is_ideal(s) and s not in cands:
            cands.append(s)
    cands.sort(key=lambda s: (s.dim, [[-x for x in r] for r in s.basis]))
    return cands


def isotropic_ideals(g: LieAlgebra, w: KForm, extra=()) -> list:
    """Report on candidate ideals: isotropy, lagrangian, and whether the perp is an ideal."""
    report = []
    for s in candidate_ideals(g, extra):
        iso = is_isotropic(w, s)
        perp = omega_orthogonal(g, w, s)
        report.append(
            {
                "ideal": s,
                "isotropic": iso,
                "lagrangian": iso and 2 * s.dim == g.dim,
                "perp_is_ideal": g.is_ideal(perp),
            }
        )
    return report


def isotropic_for_all(space: ClosedFormSpace, sub: Subspace) -> bool:
    """True when every member of the closed-form space vanishes on sub."""
    gen = space.generic_element
    for u in sub.basis:
        for v in sub.basis:
            if not evaluate(gen, [u, v]).is_zero():
                return False
    return True


def two_dim_ideal_families(g: LieAlgebra) -> list:
    """Every 2-dimensional ideal, chart by chart on the Grassmannian.

    In the chart with pivot columns (p, q) a plane is the row space of a
    reduced echelon pair with free entries; being an ideal is a polynomial
    system in those entries, solved over the reals with sympy. Returns a list
    of (rows, free_symbols) with sympy entries; families with no free
    symbols are single ideals.
    """
    import sympy as sp

    n = g.dim
    ads = [[[sp.Rational(x.numerator, x.denominator) for x in r] for r in g.ad_basis(i)] for i in range(1, n + 1)]
    out = []
    for p, q in combinations(range(n), 2):
        free = []
        rows = []
        for r, piv in enumerate((p, q)):
            row = []
            for c in range(n):
                if c == piv:
                    row.append(sp.Integer(1))
                elif c < piv or c in (p, q):
                    row.append(sp.Integer(0))
                else:
                    s = sp.Symbol(f"s{r}_{c}", real=True)
                    free.append(s)
                    row.append(s)
            rows.append(row)
        eqs = []
        for ad in ads:
            for u in rows:
                v = [sum(ad[a][b] * u[b] for b in range(n)) for a in range(n)]
                for c in range(n):
                    e = sp.expand(v[c] - v[p] * rows[0][c] - v[q] * rows[1][c])
                    if e != 0:
                        eqs.append(e)
        sols = sp.solve(eqs, free, dict=True) if eqs else [{}]
        for sol in sols:
            fam = [[sp.simplify(x.subs(sol)) for x in r] for r in rows]
            syms = sorted({s for r in fam for x in r for s in x.free_symbols}, key=str)
            out.append((fam, syms))
    return out


def _to_subspace(n: int, rows) -> Subspace:
    return Subspace(n, [[Fraction(int(x.p), int(x.q)) for x in r] for r in rows])


def _lagrangian_form_for(space: ClosedFormSpace, sub: Subspace):
    """A symplectic member of the space vanishing on sub, or None."""
    gen = space.generic_element
    cons = []
    for i, u in enumerate(sub.basis):
        for v in sub.basis[i + 1:]:
            val = evaluate(gen, [u, v])
            cons.append([val.eval({x: int(x == y) for x in space.variables}) for y in space.variables])
    m = len(space.variables)
    kernel = nullspace(cons, m) if cons else _units(m)
    sub_forms = []
    for k in kernel:
        sub_forms.append(space.form_at(k))
    sub_space = _form_space(space.algebra, [f.to_vector() for f in sub_forms])
    w = _witness_for(sub_space)
    return w.form if w else None


def lagrangian_ideal_search(g: LieAlgebra, samples=(0, 1, -1, 2)):
    """Exhaustive search for a lagrangian ideal of some symplectic form (dim 4).

    Returns ("found", ideal, form), ("none", families) when the finitely many
    2-dimensional ideals are all ruled out, or ("undecided", families) if a
    positive-dimensional family has no good sample point.
    """

    if g.dim != 4:
        raise ValueError("the exhaustive search is implemented for dimension four")
    space = closed_two_forms(g)
    fams = two_dim_ideal_families(g)
    decided = True
    for rows, syms in fams:
        if syms:
            decided = False
            points = product(samples, repeat=len(syms))
        else:
            points = [()]
        for pt in points:
            inst = [[x.subs(dict(zip(syms, pt))) for x in r] for r in rows]
            sub = _to_subspace(g.dim, inst)
            if sub.dim != 2 or not g.is_ideal(sub):
                continue
            w = _lagrangian_form_for(space, sub)
            if w is not None:
                return "found", sub, w
    return ("none" if decided else "undecided"), fams


# ---------------------------------------------------------------------------
# lagrangian ideal -> cotangent extension
# ---------------------------------------------------------------------------


@dataclass
class CotangentModel:
    complement: Subspace
    data: object  # construct.CotangentData
    algebra: LieAlgebra  # the extension on h* + h
    iso: list  # matrix of g -> h* + h, columns are images of e_i
    omega0: KForm


def lagrangian_complement(g: LieAlgebra, w: KForm, ideal: Subspace) -> list:
    """Basis v_1..v_m of an isotropic complement, built greedily."""
    n = g.dim
    m = omega_matrix(w)
    jb = ideal.basis
    vs = []
    for e in _units(n):
        if len(vs) == n - ideal.dim:
            break
        if Subspace(n, jb + vs).contains(e):
            continue
        # add j in J with w(e + j, v) = 0 for the v chosen so far
        if vs:
            rows = [[sum(a * b for a, b in zip(jv, matvec(m, v))) for jv in jb] for v in vs]
            rhs = [-sum(a * b for a, b in zip(e, matvec(m, v))) for v in vs]
            from .linalg import solve

            coef = solve(rows, rhs, len(jb))
            e = [x + sum(c * jv[k] for c, jv in zip(coef, jb)) for k, x in enumerate(e)]
        vs.append(e)
    return vs


def cotangent_model(g: LieAlgebra, w: KForm, ideal: Subspace) -> CotangentModel:
    """Symplectomorphism from (g, w) to a cotangent extension, given a lagrangian ideal."""
    from .cecoh import Module
    from .construct import CotangentData, cotangent_extension, omega0 as make_omega0

    if not g.is_ideal(ideal):
        raise PreconditionError("not an ideal")
    if not is_lagrangian(w, ideal):
        raise PreconditionError("not lagrangian")
    n = g.dim
    half = n // 2
    mw = omega_matrix(w)
    vs = lagrangian_complement(g, w, ideal)
    jb = ideal.basis

    def pair(u, v):
        return sum(a * b for a, b in zip(u, matvec(mw, v)))

    # Phi(j) = beta(j) = w(j, .) restricted to V, Phi(v_a) = x_a
    # coordinates on g: basis jb + vs
    frame = transpose(jb + vs)  # columns jb..., vs...
    frame_inv = inverse(frame)
    phi = [[Fraction(0)] * n for _ in range(n)]
    for k, j in enumerate(jb):
        for a, v in enumerate(vs):
            phi[a][k] = pair(j, v)
    for a in range(half):
        phi[half + a][half + a] = Fraction(1)
    iso = matmul(phi, frame_inv)
    iso_inv = inverse(iso)
    # model bracket: [X, Y] = iso [iso^-1 X, iso^-1 Y]
    cols = transpose(iso_inv)
    brackets = {}
    for i in range(n):
        for k in range(i + 1, n):
            v = matvec(iso, g.bracket(cols[i], cols[k]))
            if any(v):
                brackets[(i + 1, k + 1)] = v
    model = LieAlgebra(n, brackets)
    # read off h, rho and alpha
    h_br = {}
    alpha = {}
    for a in range(half):
        for b in range(a + 1, half):
            v = model.bracket_basis(half + a + 1, half + b + 1)
            if any(v[half:]):
                h_br[(a + 1, b + 1)] = v[half:]
            if any(v[:half]):
                alpha[(a + 1, b + 1)] = v[:half]
    h = LieAlgebra(half, h_br)
    action = []
    for a in range(half):
        mat = [[Fraction(0)] * half for _ in range(half)]
        for j in range(half):
            v = model.bracket_basis(half + a + 1, j + 1)
            for r in range(half):
                mat[r][j] = v[r]
        action.append(mat)
    data = CotangentData(h, Module(h, action), alpha)
    ext, w0, _ = cotangent_extension(data)
    if ext.brackets != model.brackets:
        raise AssertionError("model does not match its own cotangent data")
    return CotangentModel(Subspace(n, vs), data, ext, iso, make_omega0(half))
