from fractions import Fraction

import pytest

from vertexlab.base.exceptions import StateError, StateSyntaxError
from vertexlab.fock.grammar import format_monomial, format_state, parse_state
from vertexlab.fock.state import FockMonomial, FockState, normalize
from vertexlab.lattice.context import LatticeContext


def test_parse(a2: LatticeContext) -> None:
    state = parse_state("1/2 * b1(-2) b1(-1) e[0,0] - 3 e[1,0]", a2)

    expected = normalize([(-1, 0), (-2, 0)], (0, 0), a2) * Fraction(1, 2) - FockState.vertex(a2, (1, 0)) * 3
    assert state == expected


@pytest.mark.parametrize(
    "text",
    [
        "1/2 * b1(-2) b1(-1) e[0,0] - 3 e[1,0]",
        "e[0,0]",
        "-e[-1,1] + 2 * b2(-1) e[1,0]",
        "-1/3 * b2(-3) e[0,0] + b1(-1) b2(-1) e[0,0]",
        "0",
    ],
)
def test_round_trip(a2: LatticeContext, text: str) -> None:
    """Verify canonical text is reproduced exactly."""
    assert format_state(parse_state(text, a2)) == text


def test_scalar_is_vacuum(a2: LatticeContext) -> None:
    assert parse_state("2", a2) == FockState.vacuum(a2) * 2
    assert not parse_state("0", a2)


def test_whitespace_and_order(a2: LatticeContext) -> None:
    """Verify modes may be written in any order and spacing is ignored."""
    assert parse_state("b1( -1 )b1(-3)e[ 0 , 1 ]", a2) == parse_state("b1(-3) b1(-1) e[0,1]", a2)


@pytest.mark.parametrize(
    "text",
    ["", "b1(-1)", "e[0,0] e[1,0]", "e[0,0] * e[1,0]", "x", "e[0,0] +", "1/2 * * e[0,0]"],
)
def test_syntax_errors(a2: LatticeContext, text: str) -> None:
    with pytest.raises(StateSyntaxError):
        parse_state(text, a2)


def test_zero_denominator(a2: LatticeContext) -> None:
    with pytest.raises(StateSyntaxError, match="Zero denominator"):
        parse_state("1/0 e[1,0]", a2)
    with pytest.raises(StateSyntaxError):
        parse_state("e[0,0] - 3 / 0 * b1(-1) e[0,0]", a2)


@pytest.mark.parametrize("text", ["b1(1) e[0,0]", "b3(-1) e[0,0]", "b0(-1) e[0,0]"])
def test_invalid_modes(a2: LatticeContext, text: str) -> None:
    with pytest.raises(StateError):
        parse_state(text, a2)


def test_format_monomial() -> None:
    mono = FockMonomial(((-2, 1), (-1, 0)), (1, -1))

    assert format_monomial(mono) == "b2(-2) b1(-1) e[1,-1]"
