import math
import typing as t
from fractions import Fraction

import sympy

Scalar: t.TypeAlias = Fraction
"""Exact rational ground-field element."""

ScalarLike: t.TypeAlias = Fraction | int
"""Anything accepted where a scalar is expected."""


def as_scalar(value: "ScalarLike | sympy.Rational") -> Scalar:
    """Coerce ints, fractions and sympy rationals to a `Fraction`."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def gbinom(n: int, k: int) -> Scalar:
    """Generalized binomial coefficient n(n-1)...(n-k+1)/k! for any integer n.

    Raises
    ------
    ValueError
        If `k` is negative
    """
    if k < 0:
        msg = f"gbinom requires a nonnegative lower index, got {k}"
        raise ValueError(msg)
    return Fraction(math.prod(range(n - k + 1, n + 1)), math.factorial(k))


def binom(n: int, k: int) -> int:
    """Ordinary binomial coefficient, zero unless 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def sign(exponent: int) -> int:
    """Return (-1)**exponent."""
    return -1 if exponent % 2 else 1


def divided_power(k: int) -> Scalar:
    """Return 1/k!, the normalization of D^(k) = D^k / k!."""
    return Fraction(1, math.factorial(k))
