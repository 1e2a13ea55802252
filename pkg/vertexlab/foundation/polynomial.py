import typing as t
from fractions import Fraction

import sympy

from vertexlab.foundation.scalars import ScalarLike, as_scalar

ROW = sympy.Symbol("i", integer=True)
"""The matrix row index, the variable of every `IntPoly`."""


class IntPoly:
    """A univariate polynomial in the row index with exact rational coefficients.

    Coefficients are integer-valued on integers for the polynomials produced
    by this package but need not be integers themselves, e.g. binom(i+2, 2).
    """

    __slots__ = ("_poly",)

    def __init__(self, poly: sympy.Poly | sympy.Expr | ScalarLike = 0) -> None:
        if not isinstance(poly, sympy.Poly):
            poly = sympy.Poly(sympy.sympify(poly), ROW, domain=sympy.QQ)
        self._poly = poly

    @classmethod
    def from_coeffs(cls, coeffs: t.Sequence[ScalarLike]) -> "IntPoly":
        """Build from coefficients listed from the constant term upward."""
        expr = sum(
            (sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c)
            * ROW**k
            for k, c in enumerate(coeffs)
        )
        return cls(expr)

    @classmethod
    def binomial(cls, m: int) -> "IntPoly":
        """The polynomial i -> binom(i + m, m)."""
        numerator = sympy.prod([ROW + m - j for j in range(m)])
        return cls(sympy.expand(numerator / sympy.factorial(m)))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients from the constant term upward, trailing zeros trimmed."""
        if self._poly.is_zero:
            return ()
        return tuple(as_scalar(c) for c in reversed(self._poly.all_coeffs()))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return -1 if self._poly.is_zero else int(self._poly.degree())

    @property
    def is_zero(self) -> bool:
        return bool(self._poly.is_zero)

    def shift(self, d: int) -> "IntPoly":
        """Return i -> self(i + d)."""
        return IntPoly(self._poly.compose(sympy.Poly(ROW + d, ROW, domain=sympy.QQ)))

    def scale(self, c: ScalarLike) -> "IntPoly":
        c = as_scalar(c)
        return IntPoly(self._poly * sympy.Rational(c.numerator, c.denominator))

    def __call__(self, i: int) -> Fraction:
        return as_scalar(self._poly.eval(i))

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(self._poly + other._poly)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(self._poly - other._poly)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        return IntPoly(self._poly * other._poly)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-self._poly)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({self._poly.as_expr()})"
