"""Sparse polynomials in three variables over exact rationals.

A polynomial is a finite map from exponent triples (a1, a2, a3) to nonzero
Fraction coefficients.  The zero polynomial is the empty map and has degree -1
by convention.  Monomials are ordered graded-lexicographically with
x1 > x2 > x3; display lists the leading term first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Exponent = tuple[int, int, int]
Scalar = Union[int, Fraction]

ZERO_EXP: Exponent = (0, 0, 0)


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction coefficient, got {type(value).__name__}")


def grlex_key(exp: Exponent) -> tuple[int, Exponent]:
    """Sort key realising graded lex order with x1 > x2 > x3 (ascending)."""
    return (exp[0] + exp[1] + exp[2], exp)


class Poly3:
    """Sparse polynomial in x1, x2, x3 with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None):
        cleaned: dict[Exponent, Fraction] = {}
        if terms:
            for exp, coef in terms.items():
                e = (int(exp[0]), int(exp[1]), int(exp[2]))
                if e[0] < 0 or e[1] < 0 or e[2] < 0:
                    raise ValueError(f"negative exponent in {exp}")
                c = _as_fraction(coef)
                if c:
                    cleaned[e] = c
        self.terms = cleaned

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value: Scalar) -> "Poly3":
        return cls({ZERO_EXP: value})

    @classmethod
    def variable(cls, axis: int) -> "Poly3":
        """The coordinate polynomial x_axis, axis in 1..3."""
        _check_axis(axis)
        exp = [0, 0, 0]
        exp[axis - 1] = 1
        return cls({tuple(exp): 1})

    @classmethod
    def monomial(cls, exp: Exponent, coef: Scalar = 1) -> "Poly3":
        return cls({exp: coef})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Poly3 | Scalar") -> "Poly3":
        other = _coerce(other)
        out = dict(self.terms)
        for exp, coef in other.terms.items():
            s = out.get(exp, Fraction(0)) + coef
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        res = Poly3.__new__(Poly3)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "Poly3":
        res = Poly3.__new__(Poly3)
        res.terms = {exp: -coef for exp, coef in self.terms.items()}
        return res

    def __sub__(self, other: "Poly3 | Scalar") -> "Poly3":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "Poly3":
        return _coerce(other) - self

    def __mul__(self, other: "Poly3 | Scalar") -> "Poly3":
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            res = Poly3.__new__(Poly3)
            res.terms = {exp: coef * c for exp, coef in self.terms.items()} if c else {}
            return res
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                s = out.get(exp, Fraction(0)) + c1 * c2
                if s:
                    out[exp] = s
                else:
                    out.pop(exp, None)
        res = Poly3.__new__(Poly3)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Poly3":
        c = _as_fraction(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (Fraction(1) / c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
        if not isinstance(other, Poly3):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(a + b + c for a, b, c in self.terms)

    def coefficient(self, exp: Exponent) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def partial(self, axis: int) -> "Poly3":
        """Exact partial derivative with respect to x_axis (axis in 1..3)."""
        _check_axis(axis)
        i = axis - 1
        out: dict[Exponent, Fraction] = {}
        for exp, coef in self.terms.items():
            a = exp[i]
            if a == 0:
                continue
            new = list(exp)
            new[i] = a - 1
            out[tuple(new)] = coef * a
        res = Poly3.__new__(Poly3)
        res.terms = out
        return res

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at a rational point (p1, p2, p3)."""
        if len(point) != 3:
            raise ValueError("a point must have exactly three coordinates")
        p = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for (a, b, c), coef in self.terms.items():
            total += coef * p[0] ** a * p[1] ** b * p[2] ** c
        return total

    # -- display -----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, key=grlex_key, reverse=True):
            coef = self.terms[exp]
            mono = "*".join(
                f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}"
                for i, a in enumerate(exp)
                if a > 0
            )
            if not mono:
                body = str(abs(coef))
            elif abs(coef) == 1:
                body = mono
            else:
                body = f"{abs(coef)}*{mono}"
            sign = "-" if coef < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Poly3({self})"


def _coerce(value: "Poly3 | Scalar") -> Poly3:
    if isinstance(value, Poly3):
        return value
    return Poly3.constant(value)


def _check_axis(axis: int) -> None:
    if axis not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {axis!r}")


ZERO = Poly3()
ONE = Poly3.constant(1)
X1 = Poly3.variable(1)
X2 = Poly3.variable(2)
X3 = Poly3.variable(3)


def monomials_up_to(bound: int) -> list[Exponent]:
    """All exponent triples of total degree <= bound, ascending graded lex.

    A bound of -1 denotes the zero space and yields the empty list.
    """
    if bound < 0:
        return []
    exps: list[Exponent] = []
    for total in range(bound + 1):
        for a1 in range(total + 1):
            for a2 in range(total - a1 + 1):
                exps.append((a1, a2, total - a1 - a2))
    exps.sort(key=grlex_key)
    return exps


def poly_from_terms(pairs: Iterable[tuple[Exponent, Scalar]]) -> Poly3:
    """Build a polynomial by accumulating (exponent, coefficient) pairs."""
    out: dict[Exponent, Fraction] = {}
    for exp, coef in pairs:
        e = tuple(exp)
        s = out.get(e, Fraction(0)) + _as_fraction(coef)
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    res = Poly3.__new__(Poly3)
    res.terms = out
    return res
