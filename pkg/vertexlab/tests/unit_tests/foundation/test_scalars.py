from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from vertexlab.foundation.scalars import as_scalar, binom, divided_power, gbinom, sign


@pytest.mark.parametrize(
    ("n", "k", "expected"),
    [
        (3, 2, 3),
        (5, 0, 1),
        (-5, 0, 1),
        (-1, 2, 1),
        (-3, 1, -3),
        (-2, 3, -4),
        (2, 3, 0),
    ],
)
def test_gbinom_values(n: int, k: int, expected: int) -> None:
    """Verify the generalized binomial at positive and negative upper index."""
    assert gbinom(n, k) == expected


@given(st.integers(min_value=-30, max_value=30), st.integers(min_value=1, max_value=10))
def test_gbinom_pascal(n: int, k: int) -> None:
    """Verify Pascal's rule holds for every integer upper index."""
    assert gbinom(n, k) == gbinom(n - 1, k) + gbinom(n - 1, k - 1)


def test_gbinom_negative_k() -> None:
    with pytest.raises(ValueError):
        gbinom(3, -1)


@pytest.mark.parametrize(
    ("n", "k", "expected"),
    [(4, 2, 6), (4, 5, 0), (4, -1, 0), (-1, 0, 0), (0, 0, 1)],
)
def test_binom(n: int, k: int, expected: int) -> None:
    """Verify the ordinary binomial vanishes out of range."""
    assert binom(n, k) == expected


def test_as_scalar() -> None:
    """Verify every accepted scalar kind becomes a Fraction."""
    assert as_scalar(3) == Fraction(3)
    assert as_scalar(Fraction(1, 2)) == Fraction(1, 2)
    assert as_scalar(sympy.Rational(-2, 6)) == Fraction(-1, 3)
    assert isinstance(as_scalar(sympy.Integer(4)), Fraction)


def test_sign_and_divided_power() -> None:
    assert [sign(k) for k in range(-2, 3)] == [1, -1, 1, -1, 1]
    assert divided_power(0) == 1
    assert divided_power(3) == Fraction(1, 6)
