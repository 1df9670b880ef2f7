"""Exterior powers of the dual of an n-dimensional space.

Basis k-forms e^{i1} ^ ... ^ e^{ik} are indexed by strictly increasing 1-based
tuples. Evaluation follows the determinant convention:
(e^{i1} ^ ... ^ e^{ik})(e_{i1}, ..., e_{ik}) = 1.
"""
from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Iterable, Mapping

from .scalar import Poly, Q, parse_poly, poly_from

MultiIndex = tuple


class DimMismatch(ValueError):
    pass


@lru_cache(maxsize=None)
def basis(n: int, k: int) -> tuple:
    """All degree-k multi-indices of an n-dimensional space, in lexicographic order."""
    return tuple(combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def index_of(n: int, k: int) -> dict:
    return {idx: pos for pos, idx in enumerate(basis(n, k))}


def sort_sign(seq: Iterable[int]):
    """(sign, sorted tuple) of a sequence of indices; sign 0 on a repeat."""
    s = list(seq)
    if len(set(s)) != len(s):
        return 0, None
    sign = 1
    # insertion sort counting transpositions
    for i in range(1, len(s)):
        j = i
        while j > 0 and s[j - 1] > s[j]:
            s[j - 1], s[j] = s[j], s[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(s)


class KForm:
    """An element of Lambda^k(V*) with polynomial coefficients."""

    __slots__ = ("degree", "dim", "_coeffs")

    def __init__(self, dim: int, degree: int, coeffs: Mapping | None = None):
        if not 0 <= degree:
            raise ValueError("negative degree")
        self.dim = dim
        self.degree = degree
        clean = {}
        for idx, c in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != degree:
                raise ValueError(f"index {idx} has wrong length for degree {degree}")
            sign, key = sort_sign(idx)
            if sign == 0:
                continue
            if key and (key[0] < 1 or key[-1] > dim):
                raise ValueError(f"index {idx} out of range 1..{dim}")
            p = poly_from(c) * sign
            p = clean.get(key, Poly()) + p
            if p.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = p
        self._coeffs = clean

    @classmethod
    def basis_form(cls, dim: int, idx: Iterable[int], coeff=1) -> "KForm":
        idx = tuple(idx)
        return cls(dim, len(idx), {idx: coeff})

    @classmethod
    def from_vector(cls, dim: int, degree: int, vec) -> "KForm":
        return cls(dim, degree, {idx: c for idx, c in zip(basis(dim, degree), vec) if c})

    @classmethod
    def from_skew_matrix(cls, m) -> "KForm":
        n = len(m)
        return cls(n, 2, {(i + 1, j + 1): m[i][j] for i in range(n) for j in range(i + 1, n) if m[i][j]})

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    def coeff(self, idx) -> Poly:
        sign, key = sort_sign(idx)
        if sign == 0:
            return Poly()
        return self._coeffs.get(key, Poly()) * sign

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return all(p.is_constant() for p in self._coeffs.values())

    def to_vector(self) -> list:
        """Constant coefficients in the lexicographic basis of Lambda^k."""
        return [self._coeffs[idx].constant_value() if idx in self._coeffs else Q(0) for idx in basis(self.dim, self.degree)]

    def to_skew_matrix(self) -> list:
        """Matrix (omega(e_i, e_j)) of a 2-form; entries are Poly unless constant."""
        if self.degree != 2:
            raise ValueError("only 2-forms have a skew matrix")
        n = self.dim
        const = self.is_constant()
        zero = Q(0) if const else Poly()
        m = [[zero] * n for _ in range(n)]
        for (i, j), p in self._coeffs.items():
            v = p.constant_value() if const else p
            m[i - 1][j - 1] = v
            m[j - 1][i - 1] = -v
        return m

    def _check(self, other: "KForm"):
        if not isinstance(other, KForm):
            raise TypeError("expected a KForm")
        if other.dim != self.dim:
            raise DimMismatch(f"ambient dimensions {self.dim} and {other.dim} differ")

    def __add__(self, other: "KForm") -> "KForm":
        self._check(other)
        if other.degree != self.degree:
            raise ValueError("cannot add forms of different degree")
        out = dict(self._coeffs)
        for idx, p in other._coeffs.items():
            out[idx] = out.get(idx, Poly()) + p
        return KForm(self.dim, self.degree, out)

    def __neg__(self):
        return KForm(self.dim, self.degree, {i: -p for i, p in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, KForm):
            raise TypeError("use wedge (^) for products of forms")
        c = poly_from(c)
        return KForm(self.dim, self.degree, {i: p * c for i, p in self._coeffs.items()})

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return (self.dim, self.degree, self._coeffs) == (other.dim, other.degree, other._coeffs)

    def __hash__(self):
        return hash((self.dim, self.degree, frozenset(self._coeffs.items())))

    def subs(self, assignment) -> "KForm":
        return KForm(self.dim, self.degree, {i: p.subs(assignment) for i, p in self._coeffs.items()})

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for idx in sorted(self._coeffs):
            name = "^".join(f"e{i}" for i in idx) if idx else "1"
            p = self._coeffs[idx]
            if p == 1:
                parts.append(name)
            elif p == -1:
                parts.append(f"-{name}")
            elif len(p.terms) == 1:
                parts.append(f"{p}*{name}")
            else:
                parts.append(f"({p})*{name}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

    def to_json(self) -> list:
        return [{"indices": list(idx), "coeff": str(self._coeffs[idx])} for idx in sorted(self._coeffs)]

    @classmethod
    def from_json(cls, dim: int, data: list) -> "KForm":
        if not data:
            raise ValueError("empty form list has no degree; use KForm(dim, k)")
        degree = len(data[0]["indices"])
        return cls(dim, degree, {tuple(t["indices"]): t["coeff"] for t in data})


def wedge(a: KForm, b: KForm) -> KForm:
    a._check(b)
    deg = a.degree + b.degree
    if deg > a.dim:
        return _zero_over(a.dim, deg)
    out: dict = {}
    for ia, pa in a._coeffs.items():
        for ib, pb in b._coeffs.items():
            sign, key = sort_sign(ia + ib)
            if sign == 0:
                continue
            out[key] = out.get(key, Poly()) + pa * pb * sign
    return KForm(a.dim, deg, out)


def _zero_over(dim: int, deg: int) -> KForm:
    # degree above the ambient dimension: the zero form, degree kept for bookkeeping
    f = KForm.__new__(KForm)
    f.dim, f.degree, f._coeffs = dim, deg, {}
    return f


def power(w: KForm, m: int) -> KForm:
    if m == 0:
        return KForm(w.dim, 0, {(): 1})
    out = w
    for _ in range(m - 1):
        out = wedge(out, w)
    return out


def volume_coefficient(w: KForm) -> Poly:
    if w.degree != w.dim:
        raise ValueError("not a top-degree form")
    return w.coeff(tuple(range(1, w.dim + 1)))


def dim_lambda(n: int, k: int) -> int:
    return comb(n, k)


def evaluate(w: KForm, vectors) -> Poly:
    """w(v1, ..., vk) for coordinate vectors, determinant convention."""
    from .linalg import det

    k = w.degree
    if len(vectors) != k:
        raise ValueError("need exactly k vectors")
    total = Poly()
    for idx, p in w._coeffs.items():
        minor = [[Q(v[i - 1]) for v in vectors] for i in idx]
        d = det(minor) if k else Q(1)
        if d:
            total = total + p * d
    return total


def generic_two_form(n: int, prefix: str = "a") -> KForm:
    """sum a_ij e^i ^ e^j with one variable per basis 2-form."""
    return KForm(n, 2, {(i, j): Poly.var(f"{prefix}{i}{j}") for i, j in basis(n, 2)})


def top_power_factor(n: int) -> int:
    return factorial(n // 2)


_WEDGE = re.compile(r"e(\d+)((?:\s*\^\s*e\d+)*)")


def parse_form(text: str, dim: int, values=None) -> KForm:
    """Parse ``"a12*e1^e2 - delta*e3^e4"``; ``values`` substitutes symbols."""

    def repl(m):
        idx = [m.group(1)] + re.findall(r"\d+", m.group(2))
        return "_w_" + "_".join(idx)

    p = parse_poly(_WEDGE.sub(repl, text))
    if values:
        p = p.subs({k: Q(v) if not isinstance(v, Poly) else v for k, v in values.items()})
    out = {}
    degree = None
    for mono, c in p.terms.items():
        marks = [(v, e) for v, e in mono if v.startswith("_w_")]
        if len(marks) != 1 or marks[0][1] != 1:
            raise ValueError(f"not linear in basis forms: {text!r}")
        idx = tuple(int(i) for i in marks[0][0][3:].split("_"))
        if degree is None:
            degree = len(idx)
        elif degree != len(idx):
            raise ValueError(f"mixed degrees in {text!r}")
        rest = Poly({tuple(x for x in mono if not x[0].startswith("_w_")): c})
        out[idx] = out.get(idx, Poly()) + rest
    if degree is None:
        raise ValueError(f"no basis forms in {text!r}")
    return KForm(dim, degree, out)
