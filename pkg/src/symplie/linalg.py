"""Dense exact linear algebra over Q.

Matrices are lists of rows of Fractions. Vectors are lists. Everything here is
small (at most a few hundred columns), so plain Gauss-Jordan is fine.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalar import Q

Matrix = list
Vector = list


class SingularMap(ValueError):
    pass


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def to_matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[Q(x) for x in row] for row in rows]


def transpose(m: Matrix) -> Matrix:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt] for row in a]


def matvec(a: Matrix, v: Vector) -> Vector:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def madd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def msub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mscale(c, a: Matrix) -> Matrix:
    c = Q(c)
    return [[c * x for x in row] for row in a]


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return msub(matmul(a, b), matmul(b, a))


def is_zero_matrix(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (zero rows dropped) and pivot columns."""
    rows = [list(r) for r in m]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        pivot_row = rows[r]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], pivot_row)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1]) if m else 0


def nullspace(m: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of {x : m x = 0}, one vector per free column, in column order."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if not m:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    r, piv = rref(m)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(r, piv):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(m: Matrix, b: Vector, ncols: int | None = None):
    """One solution of m x = b, or None when inconsistent."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if not m:
        return [Fraction(0)] * ncols if all(not x for x in b) else None
    aug = [list(row) + [Q(bi)] for row, bi in zip(m, b)]
    r, piv = rref(aug)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(r, piv):
        x[pc] = row[-1]
    return x


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    r, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise SingularMap("matrix is singular")
    return [row[n:] for row in r]


def det(m: Matrix) -> Fraction:
    rows = [list(r) for r in m]
    n = len(rows)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        pv = rows[c][c]
        d *= pv
        for i in range(c + 1, n):
            f = rows[i][c] / pv
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return d


def charpoly(m: Matrix) -> list[Fraction]:
    """Coefficients [1, c1, ..., cn] of det(tI - m) = t^n + c1 t^(n-1) + ... (Faddeev-LeVerrier)."""
    n = len(m)
    coeffs = [Fraction(1)]
    mk = zeros(n, n)
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        prev = mk
        mk = matmul(m, prev) if k > 1 else [row[:] for row in m]
        if k > 1:
            c = coeffs[-1]
            mk = madd(mk, mscale(c, m))
        ck = -trace(mk) / k
        coeffs.append(ck)
    return coeffs


def is_nilpotent(m: Matrix) -> bool:
    return all(c == 0 for c in charpoly(m)[1:])


class Subspace:
    """Row space of a rational matrix, stored in canonical reduced echelon form."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        vecs = [[Q(x) for x in v] for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        basis, piv = rref(vecs) if vecs else ([], [])
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = piv

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, identity(n))

    @classmethod
    def span_of_basis_vectors(cls, n: int, indices: Iterable[int]) -> "Subspace":
        """Span of e_i for the given 1-based indices."""
        return cls(n, [[Fraction(int(j == i - 1)) for j in range(n)] for i in indices])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        if not self.basis:
            return all(not Q(x) for x in v)
        return rank(self.basis + [[Q(x) for x in v]]) == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        # x = sum a_i u_i = sum b_j w_j
        if not self.basis or not other.basis:
            return Subspace(self.ambient_dim)
        cols = self.basis + [[-x for x in w] for w in other.basis]
        sol = nullspace(transpose(cols), len(cols))
        vecs = []
        for s in sol:
            v = [Fraction(0)] * self.ambient_dim
            for a, u in zip(s[: self.dim], self.basis):
                if a:
                    v = [x + a * y for x, y in zip(v, u)]
            vecs.append(v)
        return Subspace(self.ambient_dim, vecs)

    def complement_basis(self) -> list[Vector]:
        """Standard basis vectors completing this subspace to the whole space."""
        piv = set(self.pivots)
        n = self.ambient_dim
        return [[Fraction(int(j == i)) for j in range(n)] for i in range(n) if i not in piv]

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of v in the echelon basis (v must lie in the subspace)."""
        coords = [Q(v[p]) for p in self.pivots]
        recon = [Fraction(0)] * self.ambient_dim
        for a, u in zip(coords, self.basis):
            if a:
                recon = [x + a * y for x, y in zip(recon, u)]
        if recon != [Q(x) for x in v]:
            raise ValueError("vector not in subspace")
        return coords

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, tuple(tuple(r) for r in self.basis)))

    def __repr__(self):
        rows = ["[" + ", ".join(str(x) for x in r) + "]" for r in self.basis]
        return f"Subspace(dim={self.dim}/{self.ambient_dim}, basis=[{', '.join(rows)}])"
