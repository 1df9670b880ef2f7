"""Chevalley-Eilenberg cohomology, trivial and twisted coefficients.

Sign convention: d alpha(x, y) = -alpha([x, y]) on 1-forms, extended to
Lambda(g*) as an antiderivation. So de^k = -sum_{i<j} c^k_ij e^i ^ e^j.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exterior import KForm, _zero_over, basis, index_of, sort_sign
from .linalg import (
    commutator,
    nullspace,
    rank,
    rref,
    solve,
    transpose,
    zeros,
)
from .liealg import LieAlgebra
from .scalar import Q


class NotARepresentation(ValueError):
    pass


@dataclass(frozen=True)
class ChainMap:
    degree: int
    matrix: tuple  # rows: Lambda^{k+1} basis, cols: Lambda^k basis

    def as_lists(self) -> list:
        return [list(r) for r in self.matrix]


def d_one_forms(g: LieAlgebra) -> dict:
    """de^k as {(i, j): coeff} for each k (1-based)."""
    out = {}
    for k in range(1, g.dim + 1):
        terms = {}
        for i, j in combinations(range(1, g.dim + 1), 2):
            c = g.structure_constant(i, j, k)
            if c:
                terms[(i, j)] = -c
        out[k] = terms
    return out


def _differential_rows(g: LieAlgebra, k: int) -> list:
    n = g.dim
    src = basis(n, k)
    tgt_index = index_of(n, k + 1)
    m = [[Fraction(0)] * len(src) for _ in range(len(tgt_index))]
    if k + 1 > n:
        return m
    de = d_one_forms(g)
    for col, idx in enumerate(src):
        for r, a in enumerate(idx):
            s = -1 if r % 2 else 1
            for (i, j), c in de[a].items():
                sign, key = sort_sign(idx[:r] + (i, j) + idx[r + 1:])
                if sign:
                    m[tgt_index[key]][col] += s * sign * c
    return m


def ce_differential(g: LieAlgebra, k: int) -> ChainMap:
    if not 0 <= k <= g.dim:
        raise ValueError(f"degree {k} outside 0..{g.dim}")
    return ChainMap(k, tuple(tuple(r) for r in _differential_rows(g, k)))


def _dmat(g: LieAlgebra, k: int) -> list:
    """Matrix of d_k for 0 <= k < n, cached on the algebra."""
    cache = g.__dict__.setdefault("_dcache", {})
    if k not in cache:
        cache[k] = _differential_rows(g, k)
    return cache[k]


def apply_d(g: LieAlgebra, w: KForm) -> KForm:
    """d of a form with polynomial coefficients."""
    if w.dim != g.dim:
        raise ValueError("form and algebra dimensions differ")
    k = w.degree
    if k >= g.dim:
        return _zero_over(g.dim, k + 1)
    m = _dmat(g, k)
    src = index_of(g.dim, k)
    out = {}
    for idx, p in w.coeffs.items():
        col = src[idx]
        for row, tgt in enumerate(basis(g.dim, k + 1)):
            c = m[row][col]
            if c:
                out[tgt] = out.get(tgt, 0) + p * c
    return KForm(g.dim, k + 1, out)


def _rank_d(g: LieAlgebra, k: int) -> int:
    if k < 0 or k >= g.dim:
        return 0
    m = _dmat(g, k)
    return rank(m) if m else 0


def cocycles(g: LieAlgebra, k: int) -> list:
    """Basis of ker d_k (vectors in the Lambda^k basis), echelon ordered."""
    size = len(basis(g.dim, k))
    if k >= g.dim:
        vecs = nullspace([], size)
    else:
        vecs = nullspace(_dmat(g, k), size)
    return rref(vecs)[0] if vecs else []


def coboundaries(g: LieAlgebra, k: int) -> list:
    """Basis of im d_{k-1}."""
    if k <= 0:
        return []
    m = _dmat(g, k - 1)
    cols = transpose(m)
    return rref(cols)[0] if cols else []


def betti(g: LieAlgebra, k: int) -> int:
    if not 0 <= k <= g.dim:
        raise ValueError(f"degree {k} outside 0..{g.dim}")
    size = len(basis(g.dim, k))
    return size - _rank_d(g, k) - _rank_d(g, k - 1)


def betti_numbers(g: LieAlgebra) -> list:
    return [betti(g, k) for k in range(g.dim + 1)]


def representatives(g: LieAlgebra, k: int) -> list:
    """Closed k-forms whose classes form a basis of H^k.

    Chosen greedily from the echelon basis of the cocycles, skipping those
    dependent on the coboundaries and previously chosen ones.
    """
    exact = coboundaries(g, k)
    chosen = []
    acc = list(exact)
    r = len(acc)
    for v in cocycles(g, k):
        cand = acc + [v]
        if rank(cand) > r:
            acc = cand
            r += 1
            chosen.append(KForm.from_vector(g.dim, k, v))
    return chosen


def is_closed(g: LieAlgebra, w: KForm) -> bool:
    if w.degree >= g.dim:
        return True
    return apply_d(g, w).is_zero()


def exact_primitive(g: LieAlgebra, w: KForm):
    """eta with d eta = w, or None when w is not exact (constant coefficients)."""
    k = w.degree
    if w.is_zero():
        return KForm(g.dim, max(k - 1, 0))
    if k == 0:
        return None
    m = _dmat(g, k - 1)
    sol = solve(m, w.to_vector(), len(basis(g.dim, k - 1)))
    if sol is None:
        return None
    return KForm.from_vector(g.dim, k - 1, sol)


def is_exact(g: LieAlgebra, w: KForm) -> bool:
    return exact_primitive(g, w) is not None


def in_cohomology_span(g: LieAlgebra, forms: list) -> bool:
    """True if the classes of the given closed forms are linearly independent."""
    k = forms[0].degree
    exact = coboundaries(g, k)
    vecs = [f.to_vector() for f in forms]
    return rank(exact + vecs) == len(exact) + len(vecs) if vecs else True


# ---------------------------------------------------------------------------
# coefficients in a module
# ---------------------------------------------------------------------------


class Module:
    """Representation of a Lie algebra h on Q^m, one matrix per basis vector of h.

    ``action[a]`` is rho(e_{a+1}); column j is the image of the j-th basis vector.
    """

    def __init__(self, h: LieAlgebra, action: list, check: bool = True):
        if len(action) != h.dim:
            raise ValueError("need one matrix per basis vector of h")
        self.h = h
        self.action = [[[Q(x) for x in row] for row in a] for a in action]
        self.dim = len(self.action[0]) if self.action else 0
        if check and not self.is_representation():
            raise NotARepresentation("rho([x,y]) != [rho(x), rho(y)]")

    @classmethod
    def trivial(cls, h: LieAlgebra, m: int) -> "Module":
        return cls(h, [zeros(m, m) for _ in range(h.dim)])

    def rho(self, v) -> list:
        out = zeros(self.dim, self.dim)
        for c, a in zip(v, self.action):
            if c:
                out = [[x + Q(c) * y for x, y in zip(r1, r2)] for r1, r2 in zip(out, a)]
        return out

    def is_representation(self) -> bool:
        n = self.h.dim
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self.rho(self.h.bracket_basis(i + 1, j + 1))
                rhs = commutator(self.action[i], self.action[j])
                if lhs != rhs:
                    return False
        return True


def _eval_basis(idx: tuple, args: tuple) -> int:
    """(e^idx)(e_args) for basis indices (1-based), determinant convention."""
    sign, key = sort_sign(args)
    if sign == 0 or key != idx:
        return 0
    return sign


def twisted_differential(h: LieAlgebra, mod: Module, k: int) -> list:
    """Matrix of d: C^k(h, M) -> C^{k+1}(h, M).

    Basis of C^k is (I, a) -> e^I (x) m_a, ordered I-major. Formula:
    d c(x_0..x_k) = sum_i (-1)^i x_i . c(..^i..) + sum_{i<j} (-1)^{i+j} c([x_i,x_j], ..^i..^j..).
    """
    n, m = h.dim, mod.dim
    src = basis(n, k)
    tgt = basis(n, k + 1)
    mat = [[Fraction(0)] * (len(src) * m) for _ in range(len(tgt) * m)]
    for col_i, idx in enumerate(src):
        for a in range(m):
            col = col_i * m + a
            for row_j, args in enumerate(tgt):
                val = [Fraction(0)] * m
                for i in range(k + 1):
                    rest = args[:i] + args[i + 1:]
                    e = _eval_basis(idx, rest)
                    if e:
                        s = -e if i % 2 else e
                        act = mod.action[args[i] - 1]
                        for b in range(m):
                            val[b] += s * act[b][a]
                for i in range(k + 1):
                    for j in range(i + 1, k + 1):
                        br = h.bracket_basis(args[i], args[j])
                        rest = args[:i] + args[i + 1:j] + args[j + 1:]
                        s = 1 if (i + j) % 2 == 0 else -1
                        for l, c in enumerate(br, start=1):
                            if c:
                                e = _eval_basis(idx, (l,) + rest)
                                if e:
                                    val[a] += s * c * e
                for b in range(m):
                    if val[b]:
                        mat[row_j * m + b][col] = val[b]
    return mat


def cohomology_with_coeffs(h: LieAlgebra, mod: Module, k: int):
    """(dimension of H^k(h, M), list of cocycle vectors spanning a complement of B^k)."""
    n, m = h.dim, mod.dim
    size = len(basis(n, k)) * m
    if k < n:
        dk = twisted_differential(h, mod, k)
        z = nullspace(dk, size)
    else:
        z = nullspace([], size)
    if k > 0:
        b = rref(transpose(twisted_differential(h, mod, k - 1)))[0]
    else:
        b = []
    reps = []
    acc = list(b)
    for v in rref(z)[0] if z else []:
        if rank(acc + [v]) > len(acc):
            acc = acc + [v]
            reps.append(v)
    return len(reps), reps
