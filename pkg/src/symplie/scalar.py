"""Exact rationals and sparse multivariate polynomials over them.

Rationals are :class:`fractions.Fraction`; this module only adds parsing and
formatting helpers plus the :class:`Poly` ring used for generic form
coefficients.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction
Scalar = Union[int, Fraction]


class MissingAssignment(KeyError):
    pass


def Q(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot make a rational from {x!r}")


def fmt(x: Fraction) -> str:
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_sqrt(x: Fraction):
    """Exact square root of a non-negative rational, or None if irrational."""
    from math import isqrt

    x = Q(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def _var_key(name: str):
    # natural order: a2 < a12
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", name)]


# A monomial is a sorted tuple of (variable, exponent) pairs, exponents >= 1.
Monomial = tuple


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda ve: _var_key(ve[0])))


class Poly:
    """Sparse polynomial with Fraction coefficients in named variables.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = Q(c)
                if c:
                    clean[tuple(m)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls({(): c})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): 1})

    @classmethod
    def lift(cls, x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return cls.const(x)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    @property
    def variables(self) -> tuple:
        names = {v for m in self._terms for v, _ in m}
        return tuple(sorted(names, key=_var_key))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), Fraction(0))

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self._terms), default=0)

    def __add__(self, other):
        other = Poly.lift(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-Poly.lift(other))

    def __rsub__(self, other):
        return Poly.lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = Q(other)
            return Poly({m: c * v for m, v in self._terms.items()})
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, c):
        c = Q(c)
        return Poly({m: v / c for m, v in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def eval(self, assignment: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            t = c
            for v, e in m:
                if v not in assignment:
                    raise MissingAssignment(v)
                t *= Q(assignment[v]) ** e
            total += t
        return total

    def subs(self, assignment: Mapping[str, "Poly | Scalar"]) -> "Poly":
        """Substitute polynomials for some variables; others stay symbolic."""
        total = Poly()
        for m, c in self._terms.items():
            t = Poly.const(c)
            for v, e in m:
                if v in assignment:
                    t = t * Poly.lift(assignment[v]) ** e
                else:
                    t = t * Poly({((v, e),): 1})
            total = total + t
        return total

    def _sorted_terms(self):
        def key(item):
            m, _ = item
            return (-sum(e for _, e in m), [(_var_key(v), -e) for v, e in m])

        return sorted(self._terms.items(), key=key)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self._sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not m:
                body = fmt(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{fmt(abs(c))}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({str(self)!r})"


def poly_is_zero(p: Poly) -> bool:
    return Poly.lift(p).is_zero()


def poly_eval(p: Poly, assignment: Mapping[str, Scalar]) -> Fraction:
    return Poly.lift(p).eval(assignment)


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def parse_poly(text: str) -> Poly:
    """Parse strings such as ``"a14*a23 - 3/2*a13^2"``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad polynomial syntax at position {pos}: {text!r}")
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", Fraction(num)))
        elif name is not None:
            tokens.append(("var", name))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    tokens.append(("end", None))
    idx = 0

    def peek():
        return tokens[idx]

    def take():
        nonlocal idx
        tok = tokens[idx]
        idx += 1
        return tok

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        result = term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            result = result + t if op == "+" else result - t
        return result

    def term():
        result = factor()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            f = factor()
            if op == "*":
                result = result * f
            else:
                result = result / f.constant_value()
        return result

    def factor():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, val = take()
            if kind != "num" or val.denominator != 1:
                raise ValueError("exponent must be a non-negative integer")
            base = base ** int(val)
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return Poly.const(val)
        if kind == "var":
            return Poly.var(val)
        if (kind, val) == ("op", "("):
            inner = expr()
            if take() != ("op", ")"):
                raise ValueError("unbalanced parentheses")
            return inner
        if (kind, val) == ("op", "-"):
            return -factor()
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    result = expr()
    if peek()[0] != "end":
        raise ValueError(f"trailing input in {text!r}")
    return result


def poly_from(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, str):
        return parse_poly(x)
    return Poly.const(x)


def linear_combination(coeffs: Iterable[Scalar], polys: Iterable[Poly]) -> Poly:
    out = Poly()
    for c, p in zip(coeffs, polys):
        out = out + p * c
    return out
