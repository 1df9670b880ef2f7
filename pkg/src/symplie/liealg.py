"""Lie algebras given by rational structure constants, the solvable
four-dimensional catalog, and isomorphism invariants used to recognise
catalog members after a change of basis.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from .linalg import (
    Subspace,
    charpoly,
    inverse,
    matmul,
    matvec,
    nullspace,
    solve,
    trace,
    transpose,
)
from .scalar import Q, fmt, rational_sqrt


class NotALieAlgebra(ValueError):
    def __init__(self, triple, residual=None):
        self.triple = tuple(triple)
        self.residual = residual
        super().__init__(f"Jacobi identity fails on basis triple {self.triple}")


class InvalidParameter(ValueError):
    pass


class UnknownAlgebra(LookupError):
    pass


class Ambiguous(LookupError):
    def __init__(self, candidates):
        self.candidates = list(candidates)
        super().__init__("fingerprint matches several catalog entries: " + ", ".join(map(str, self.candidates)))


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q on a fixed basis e_1..e_n.

    ``brackets[(i, j)]`` (1-based, i < j) is the coordinate vector of [e_i, e_j].
    The Jacobi identity is checked on every basis triple at construction.
    """

    def __init__(self, dim: int, brackets: dict | None = None, labels: Sequence[str] | None = None, name: str | None = None, check: bool = True):
        self.dim = dim
        self.labels = tuple(labels) if labels else tuple(f"e{i}" for i in range(1, dim + 1))
        self.name = name
        table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), vec in (brackets or {}).items():
            if i == j:
                if any(vec):
                    raise ValueError(f"[e{i}, e{i}] must vanish")
                continue
            vec = [Q(x) for x in vec]
            if len(vec) != dim:
                raise ValueError("bracket vector has wrong length")
            table[i - 1][j - 1] = vec
            table[j - 1][i - 1] = [-x for x in vec]
        self._table = table
        if check:
            bad = self.jacobi_violation()
            if bad is not None:
                raise NotALieAlgebra(bad)

    # -- basic structure -------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> list:
        """[e_i, e_j] with 1-based indices."""
        return list(self._table[i - 1][j - 1])

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        return self._table[i - 1][j - 1][k - 1]

    def bracket(self, u: Sequence, v: Sequence) -> list:
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            if not u[i]:
                continue
            for j in range(n):
                if not v[j]:
                    continue
                c = Q(u[i]) * Q(v[j])
                row = self._table[i][j]
                for k in range(n):
                    if row[k]:
                        out[k] += c * row[k]
        return out

    def ad(self, x: Sequence) -> list:
        """Matrix of ad_x; column j is [x, e_j]."""
        cols = [self.bracket(x, unit(self.dim, j)) for j in range(self.dim)]
        return transpose(cols)

    def ad_basis(self, i: int) -> list:
        return transpose([self._table[i - 1][j] for j in range(self.dim)])

    @property
    def brackets(self) -> dict:
        """Nonzero brackets [e_i, e_j], i < j, 1-based."""
        out = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if any(self._table[i][j]):
                    out[(i + 1, j + 1)] = list(self._table[i][j])
        return out

    def structure_constants(self) -> list:
        """(i, j, k, c) for every nonzero c^k_ij with i < j."""
        out = []
        for (i, j), vec in sorted(self.brackets.items()):
            for k, c in enumerate(vec, start=1):
                if c:
                    out.append((i, j, k, c))
        return out

    def jacobi_violation(self):
        n = self.dim
        for i, j, l in combinations(range(n), 3):
            ei, ej, el = unit(n, i), unit(n, j), unit(n, l)
            s = [a + b + c for a, b, c in zip(
                self.bracket(self._table[i][j], el),
                self.bracket(self._table[j][l], ei),
                self.bracket(self._table[l][i], ej),
            )]
            if any(s):
                return (i + 1, j + 1, l + 1)
        return None

    def is_abelian(self) -> bool:
        return not self.brackets

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._table == other._table

    def __hash__(self):
        return hash((self.dim, tuple(sorted((k, tuple(v)) for k, v in self.brackets.items()))))

    def __repr__(self):
        rel = ", ".join(f"[e{i},e{j}]={_vec_str(v)}" for (i, j), v in sorted(self.brackets.items()))
        label = f"{self.name}: " if self.name else ""
        return f"LieAlgebra({label}dim={self.dim}{', ' + rel if rel else ''})"

    # -- JSON ------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "brackets": [{"i": i, "j": j, "k": k, "c": fmt(c)} for i, j, k, c in self.structure_constants()],
        }

    @classmethod
    def from_json(cls, data) -> "LieAlgebra":
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["dim"])
        entries = [(int(b["i"]), int(b["j"]), int(b["k"]), b.get("c", "1")) for b in data.get("brackets", [])]
        return from_structure_constants(n, entries)

    # -- changes of basis and subspaces ------------------------------------

    def change_basis(self, p: Sequence[Sequence]) -> "LieAlgebra":
        """Same algebra in the basis f_j = sum_i p[i][j] e_i."""
        p = [[Q(x) for x in row] for row in p]
        pinv = inverse(p)
        cols = transpose(p)
        br = {}
        for a in range(self.dim):
            for b in range(a + 1, self.dim):
                v = matvec(pinv, self.bracket(cols[a], cols[b]))
                if any(v):
                    br[(a + 1, b + 1)] = v
        return LieAlgebra(self.dim, br, check=False)

    def bracket_span(self, u: Subspace, w: Subspace) -> Subspace:
        return Subspace(self.dim, [self.bracket(a, b) for a in u.basis for b in w.basis])

    def is_ideal(self, w: Subspace) -> bool:
        full = Subspace.full(self.dim)
        return w.contains_subspace(self.bracket_span(full, w))

    def is_subalgebra(self, w: Subspace) -> bool:
        return w.contains_subspace(self.bracket_span(w, w))

    def is_abelian_subspace(self, w: Subspace) -> bool:
        return all(not any(self.bracket(a, b)) for a in w.basis for b in w.basis)

    def restrict_ad(self, x: Sequence, w: Subspace) -> list:
        """Matrix of ad_x on an ad_x-invariant subspace, in its echelon basis."""
        cols = [w.coordinates(self.bracket(x, b)) for b in w.basis]
        return transpose(cols) if cols else []

    def quotient(self, big: Subspace, small: Subspace) -> tuple["LieAlgebra", list]:
        """big/small for a subalgebra ``big`` and an ideal ``small`` of it.

        Returns the quotient algebra and the representatives in ``big`` chosen
        for its basis.
        """
        reps = []
        acc = Subspace(self.dim, small.basis)
        for v in big.basis:
            if not acc.contains(v):
                reps.append(v)
                acc = Subspace(self.dim, acc.basis + [v])
        m = len(reps)
        # solve bracket = sum c_k rep_k + (element of small)
        cols = reps + small.basis
        mat = transpose(cols)
        br = {}
        for a in range(m):
            for b in range(a + 1, m):
                sol = solve(mat, self.bracket(reps[a], reps[b]), len(cols))
                if sol is None:
                    raise ValueError("not closed: big is not a subalgebra")
                v = sol[:m]
                if any(v):
                    br[(a + 1, b + 1)] = v
        return LieAlgebra(m, br), reps


def unit(n: int, i: int) -> list:
    """0-based unit vector."""
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def _vec_str(v) -> str:
    parts = []
    for k, c in enumerate(v, start=1):
        if c:
            parts.append(f"{fmt(c)}*e{k}" if c != 1 else f"e{k}")
    return "+".join(parts).replace("+-", "-") or "0"


def from_structure_constants(n: int, entries: Iterable, labels=None, name=None) -> LieAlgebra:
    """Build from (i, j, k, c): [e_i, e_j] gets c * e_k. Entries with i > j are
    read through antisymmetry."""
    br: dict = {}
    for i, j, k, c in entries:
        i, j, k = int(i), int(j), int(k)
        if not (1 <= i <= n and 1 <= j <= n and 1 <= k <= n) or i == j:
            raise ValueError(f"bad structure-constant index ({i},{j},{k})")
        c = Q(c)
        if i > j:
            i, j, c = j, i, -c
        vec = br.setdefault((i, j), [Fraction(0)] * n)
        vec[k - 1] += c
    return LieAlgebra(n, br, labels=labels, name=name)


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, name=f"R{n}")


# ---------------------------------------------------------------------------
# catalog of solvable four-dimensional real Lie algebras
# ---------------------------------------------------------------------------

PARAM_NAMES = {
    "R4": (),
    "rh3": (),
    "rr3": (),
    "rr3_lam": ("lam",),
    "rr3p_gam": ("gam",),
    "r2r2": (),
    "r2p": (),
    "n4": (),
    "r4": (),
    "r4_mu": ("mu",),
    "r4_ab": ("alpha", "beta"),
    "r4p_gd": ("gam", "delta"),
    "d4": (),
    "d4_lam": ("lam",),
    "d4p_del": ("delta",),
    "h4": (),
}

FAMILIES = tuple(PARAM_NAMES)


@dataclass(frozen=True)
class CatalogId:
    family: str
    params: tuple = ()

    def __post_init__(self):
        if self.family not in PARAM_NAMES:
            raise UnknownAlgebra(f"unknown catalog family {self.family!r}")
        names = PARAM_NAMES[self.family]
        if len(self.params) != len(names):
            raise InvalidParameter(f"{self.family} takes parameters {names}, got {len(self.params)}")
        object.__setattr__(self, "params", tuple(Q(p) for p in self.params))

    @property
    def param_dict(self) -> dict:
        return dict(zip(PARAM_NAMES[self.family], self.params))

    def __str__(self):
        if not self.params:
            return self.family
        return f"{self.family}:" + ",".join(fmt(p) for p in self.params)

    @classmethod
    def parse(cls, text: str) -> "CatalogId":
        text = text.strip()
        fam, _, rest = text.partition(":")
        fam = fam.strip()
        if fam not in PARAM_NAMES:
            raise UnknownAlgebra(f"unknown catalog family {fam!r}")
        names = PARAM_NAMES[fam]
        values = []
        if rest.strip():
            pieces = [p.strip() for p in rest.split(",")]
            if all("=" in p for p in pieces):
                kv = {k.strip(): v for k, v in (p.split("=", 1) for p in pieces)}
                if set(kv) != set(names):
                    raise InvalidParameter(f"{fam} takes parameters {names}")
                values = [kv[n] for n in names]
            else:
                values = pieces
        try:
            values = [Q(v) for v in values]
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidParameter(str(exc)) from None
        return cls(fam, tuple(values))


def _check_range(cid: CatalogId):
    p = cid.param_dict
    f = cid.family
    bad = False
    if f == "rr3_lam":
        bad = not (-1 <= p["lam"] <= 1)
    elif f == "rr3p_gam":
        bad = p["gam"] < 0
    elif f == "r4_ab":
        a, b = p["alpha"], p["beta"]
        bad = not ((-1 < a <= b <= 1 and a * b != 0) or (-1 == a <= b <= 0))
    elif f == "r4p_gd":
        bad = p["delta"] <= 0
    elif f == "d4_lam":
        bad = p["lam"] < Fraction(1, 2)
    elif f == "d4p_del":
        bad = p["delta"] < 0
    if bad:
        raise InvalidParameter(f"parameters out of range for {f}: {', '.join(f'{k}={fmt(v)}' for k, v in p.items())}")


def _relations(cid: CatalogId) -> list:
    p = cid.param_dict
    half = Fraction(1, 2)
    f = cid.family
    if f == "R4":
        return []
    if f == "rh3":
        return [(1, 2, 3, 1)]
    if f == "rr3":
        return [(1, 2, 2, 1), (1, 3, 2, 1), (1, 3, 3, 1)]
    if f == "rr3_lam":
        return [(1, 2, 2, 1), (1, 3, 3, p["lam"])]
    if f == "rr3p_gam":
        g = p["gam"]
        return [(1, 2, 2, g), (1, 2, 3, -1), (1, 3, 2, 1), (1, 3, 3, g)]
    if f == "r2r2":
        return [(1, 2, 2, 1), (3, 4, 4, 1)]
    if f == "r2p":
        return [(1, 3, 3, 1), (1, 4, 4, 1), (2, 3, 4, 1), (2, 4, 3, -1)]
    if f == "n4":
        return [(4, 1, 2, 1), (4, 2, 3, 1)]
    if f == "r4":
        return [(4, 1, 1, 1), (4, 2, 1, 1), (4, 2, 2, 1), (4, 3, 2, 1), (4, 3, 3, 1)]
    if f == "r4_mu":
        mu = p["mu"]
        return [(4, 1, 1, 1), (4, 2, 2, mu), (4, 3, 2, 1), (4, 3, 3, mu)]
    if f == "r4_ab":
        return [(4, 1, 1, 1), (4, 2, 2, p["alpha"]), (4, 3, 3, p["beta"])]
    if f == "r4p_gd":
        g, d = p["gam"], p["delta"]
        return [(4, 1, 1, 1), (4, 2, 2, g), (4, 2, 3, -d), (4, 3, 2, d), (4, 3, 3, g)]
    if f == "d4":
        return [(1, 2, 3, 1), (4, 1, 1, 1), (4, 2, 2, -1)]
    if f == "d4_lam":
        lam = p["lam"]
        return [(1, 2, 3, 1), (4, 3, 3, 1), (4, 1, 1, lam), (4, 2, 2, 1 - lam)]
    if f == "d4p_del":
        d = p["delta"]
        return [(1, 2, 3, 1), (4, 1, 1, d / 2), (4, 1, 2, -1), (4, 3, 3, d), (4, 2, 1, 1), (4, 2, 2, d / 2)]
    if f == "h4":
        return [(1, 2, 3, 1), (4, 3, 3, 1), (4, 1, 1, half), (4, 2, 1, 1), (4, 2, 2, half)]
    raise UnknownAlgebra(f)


def catalog(cid: "CatalogId | str", **params) -> LieAlgebra:
    """Bracket table of a catalog entry, e.g. ``catalog("d4_lam:3/4")`` or
    ``catalog("d4_lam", lam="3/4")``."""
    if isinstance(cid, str):
        if params:
            names = PARAM_NAMES.get(cid)
            if names is None:
                raise UnknownAlgebra(cid)
            cid = CatalogId(cid, tuple(params[n] for n in names))
        else:
            cid = CatalogId.parse(cid)
    _check_range(cid)
    return _catalog_cached(cid)


@lru_cache(maxsize=None)
def _catalog_cached(cid: CatalogId) -> LieAlgebra:
    return from_structure_constants(4, _relations(cid), name=str(cid))


# ---------------------------------------------------------------------------
# structural invariants
# ---------------------------------------------------------------------------


def derived_series(g: LieAlgebra) -> list:
    series = [Subspace.full(g.dim)]
    while True:
        nxt = g.bracket_span(series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(g: LieAlgebra) -> list:
    full = Subspace.full(g.dim)
    series = [full]
    while True:
        nxt = g.bracket_span(full, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def derived_algebra(g: LieAlgebra) -> Subspace:
    full = Subspace.full(g.dim)
    return g.bracket_span(full, full)


def center(g: LieAlgebra) -> Subspace:
    # x with [x, e_i] = 0 for all i: stack the linear maps x -> [x, e_i]
    rows = []
    for i in range(g.dim):
        # x -> [x, e_i] has matrix with column j = [e_j, e_i]
        m = transpose([g.bracket_basis(j + 1, i + 1) for j in range(g.dim)])
        rows.extend(m)
    return Subspace(g.dim, nullspace(rows, g.dim))


def is_unimodular(g: LieAlgebra) -> bool:
    return all(trace(g.ad_basis(i)) == 0 for i in range(1, g.dim + 1))


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].dim == 0


def is_solvable(g: LieAlgebra) -> bool:
    return derived_series(g)[-1].dim == 0


def derivations(g: LieAlgebra) -> Subspace:
    """Derivations as a subspace of flattened n x n matrices.

    Entry ``D[k][i]`` (row-major index k*n+i) is the e_k coordinate of D e_i.
    """
    n = g.dim
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            cij = g.bracket_basis(i + 1, j + 1)
            # D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] = 0, one equation per output coord k
            for k in range(n):
                row = [Fraction(0)] * (n * n)
                for l in range(n):
                    if cij[l]:
                        row[k * n + l] += cij[l]
                for m in range(n):
                    c_mj = g.structure_constant(m + 1, j + 1, k + 1)
                    if c_mj:
                        row[m * n + i] -= c_mj
                    c_im = g.structure_constant(i + 1, m + 1, k + 1)
                    if c_im:
                        row[m * n + j] -= c_im
                if any(row):
                    rows.append(row)
    return Subspace(n * n, nullspace(rows, n * n))


def unflatten(v: Sequence, n: int) -> list:
    return [list(v[k * n:(k + 1) * n]) for k in range(n)]


def is_derivation(g: LieAlgebra, d: Sequence[Sequence]) -> bool:
    n = g.dim
    d = [[Q(x) for x in row] for row in d]
    cols = transpose(d)
    for i in range(n):
        for j in range(i + 1, n):
            lhs = matvec(d, g.bracket_basis(i + 1, j + 1))
            rhs = [a + b for a, b in zip(g.bracket(cols[i], unit(n, j)), g.bracket(unit(n, i), cols[j]))]
            if lhs != rhs:
                return False
    return True


def associative_envelope(mats: list, unital: bool = True) -> list:
    """Basis (flattened) of the associative algebra generated by ``mats``."""
    n = len(mats[0]) if mats else 0
    from .linalg import identity

    gens = list(mats)
    start = ([identity(n)] if unital else []) + gens

    def flat(m):
        return [x for row in m for x in row]

    # echelon rows in insertion order; each row vanishes on all earlier pivots
    pivots: list = []
    basis_mats: list = []

    def add(m):
        v = flat(m)
        for p, r in pivots:
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, r)]
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            return False
        c = v[lead]
        pivots.append((lead, [x / c for x in v]))
        basis_mats.append(m)
        return True

    frontier = [m for m in start if add(m)]
    while frontier:
        new = []
        for m in frontier:
            for gmat in gens:
                p = matmul(gmat, m)
                if add(p):
                    new.append(p)
        frontier = new
    return basis_mats


def nilradical(g: LieAlgebra) -> Subspace:
    """{x : ad_x nilpotent}; for solvable g this is the nilradical.

    ad_x is nilpotent iff tr(ad_x b) = 0 for every b in the unital associative
    algebra generated by ad(g) (Lie's theorem plus Dickson's trace criterion).
    """
    n = g.dim
    ads = [g.ad_basis(i) for i in range(1, n + 1)]
    if all(not any(x for row in a for x in row) for a in ads):
        return Subspace.full(n)
    env = associative_envelope(ads)
    rows = []
    for b in env:
        rows.append([trace(matmul(a, b)) for a in ads])
    return Subspace(n, nullspace(rows, n))


def _normalized_charpoly(coeffs: list):
    c = coeffs[1:]
    nz = next((j for j, x in enumerate(c, start=1) if x), None)
    if nz is None:
        return ("nilpotent",)
    cj = c[nz - 1]
    if nz == 1:
        return tuple(x / cj ** k for k, x in enumerate(c, start=1))
    # rescaling x by s multiplies c_k by s^k, so the sign of c_j survives for even j
    sign = (1 if cj > 0 else -1) if nz % 2 == 0 else 0
    return (f"c{nz}", sign) + tuple(x ** nz / cj ** k for k, x in enumerate(c, start=1))


def ad_spectrum(g: LieAlgebra, nil: Subspace | None = None):
    """Characteristic polynomial of ad_x on the nilradical, x a complement
    generator; None unless the nilradical has codimension one."""
    if nil is None:
        nil = nilradical(g)
    if nil.dim != g.dim - 1:
        return None
    x = nil.complement_basis()[0]
    return charpoly(g.restrict_ad(x, nil))


def killing_form(g: LieAlgebra) -> list:
    ads = [g.ad_basis(i) for i in range(1, g.dim + 1)]
    return [[trace(matmul(a, b)) for b in ads] for a in ads]


def _sign_changes(coeffs) -> int:
    signs = [x > 0 for x in coeffs if x]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia(sym: list) -> tuple:
    """(positive, negative, zero) eigenvalue counts of a rational symmetric matrix.

    The characteristic polynomial is real-rooted, so Descartes' rule is exact.
    """
    cp = charpoly(sym)
    n = len(sym)
    zero = 0
    while zero < n and cp[n - zero] == 0:
        zero += 1
    core = cp[: n + 1 - zero]
    pos = _sign_changes(core)
    neg = _sign_changes([c * (-1) ** (len(core) - 1 - i) for i, c in enumerate(core)])
    return pos, neg, zero


@dataclass(frozen=True)
class Fingerprint:
    dim_derived: int
    dim_derived2: int
    dim_center: int
    dim_lcs: tuple
    unimodular: bool
    betti: tuple
    dim_der: int
    nilradical_dim: int
    ad_spectrum_key: tuple | None = None
    killing_inertia: tuple = ()

    def to_json(self) -> dict:
        key = None
        if self.ad_spectrum_key is not None:
            key = [x if isinstance(x, str) else fmt(x) for x in self.ad_spectrum_key]
        return {
            "dim_derived": self.dim_derived,
            "dim_derived2": self.dim_derived2,
            "dim_center": self.dim_center,
            "dim_lcs": list(self.dim_lcs),
            "unimodular": self.unimodular,
            "betti": list(self.betti),
            "dim_der": self.dim_der,
            "nilradical_dim": self.nilradical_dim,
            "ad_spectrum_key": key,
            "killing_inertia": list(self.killing_inertia),
        }


def fingerprint(g: LieAlgebra) -> Fingerprint:
    from .cecoh import betti_numbers

    ds = derived_series(g)
    lcs = lower_central_series(g)
    nil = nilradical(g)
    spec = ad_spectrum(g, nil)
    return Fingerprint(
        dim_derived=ds[1].dim if len(ds) > 1 else g.dim,
        dim_derived2=ds[2].dim if len(ds) > 2 else ds[-1].dim,
        dim_center=center(g).dim,
        dim_lcs=tuple(s.dim for s in lcs),
        unimodular=is_unimodular(g),
        betti=tuple(betti_numbers(g)[1:g.dim]),
        dim_der=derivations(g).dim,
        nilradical_dim=nil.dim,
        ad_spectrum_key=_normalized_charpoly(spec) if spec is not None else None,
        killing_inertia=inertia(killing_form(g)),
    )


# ---------------------------------------------------------------------------
# identification against the catalog
# ---------------------------------------------------------------------------


def _int_divisors(m: int) -> list:
    m = abs(m)
    out = set()
    i = 1
    while i * i <= m:
        if m % i == 0:
            out.add(i)
            out.add(m // i)
        i += 1
    return sorted(out)


def rational_roots(coeffs: list) -> list:
    """Rational roots (with multiplicity) of t^n + c1 t^(n-1) + ... + cn."""
    from math import lcm

    poly = [Q(c) for c in coeffs]
    roots = []
    while len(poly) > 1 and poly[-1] == 0:
        roots.append(Fraction(0))
        poly = poly[:-1]
    found = True
    while found and len(poly) > 1:
        found = False
        den = lcm(*(c.denominator for c in poly))
        ints = [int(c * den) for c in poly]
        for p in _int_divisors(ints[-1]):
            for q in _int_divisors(ints[0]):
                for r in (Fraction(p, q), Fraction(-p, q)):
                    # synthetic division
                    acc = Fraction(0)
                    quot = []
                    for c in poly:
                        acc = acc * r + c
                        quot.append(acc)
                    if quot[-1] == 0:
                        roots.append(r)
                        poly = quot[:-1]
                        found = True
                        break
                if found:
                    break
            if found:
                break
    return roots, poly


def _param_candidates(g: LieAlgebra) -> list:
    spec = ad_spectrum(g)
    cands = {Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2)}
    if spec is None:
        return sorted(cands)
    roots, rest = rational_roots(spec)
    nz = [r for r in roots if r]
    for a in nz:
        for b in nz:
            cands.add(a / b)
    if len(rest) == 3:
        # t^2 + b t + c = (t - re)^2 + im^2
        b, c = rest[1], rest[2]
        re = -b / 2
        im2 = c - re * re
        im = rational_sqrt(im2)
        if im:
            cands.update({abs(re) / im})
            for r in nz:
                cands.update({im / abs(r), abs(r) / im, re / r, -re / r})
    return sorted(cands)


@lru_cache(maxsize=None)
def _catalog_fingerprint(cid: CatalogId) -> Fingerprint:
    return fingerprint(catalog(cid))


# Catalog entries that name one and the same algebra.
# r4_ab at (-1, 0) is rr3_lam at -1 with e3 and e4 swapped roles.
SAME_ALGEBRA = {frozenset({"rr3_lam:-1", "r4_ab:-1,0"})}


def identify(g: LieAlgebra):
    """Catalog id whose fingerprint equals that of g; None when nothing matches."""
    if g.dim != 4:
        raise ValueError("identify only handles four-dimensional algebras")
    fp = fingerprint(g)
    cands = _param_candidates(g)
    matches = []
    for fam, names in PARAM_NAMES.items():
        for vals in product(cands, repeat=len(names)):
            try:
                cid = CatalogId(fam, vals)
                _check_range(cid)
            except InvalidParameter:
                continue
            if _catalog_fingerprint(cid) == fp:
                matches.append(cid)
    if not matches:
        return None
    if len(matches) > 1 and frozenset(map(str, matches)) in SAME_ALGEBRA:
        return matches[0]
    if len(matches) > 1:
        raise Ambiguous(matches)
    return matches[0]
