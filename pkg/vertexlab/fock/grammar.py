"""Text form of Fock states.

    state    := '-'? term (('+' | '-') term)*
    term     := scalar '*'? monomial? | monomial
    scalar   := int ('/' int)?
    monomial := mode* point
    mode     := 'b' idx '(' negint ')'
    point    := 'e[' int (',' int)* ']'

Basis indices are written 1-based. A term without a monomial is a multiple
of the vacuum. Example: ``1/2 * b1(-2) b1(-1) e[0,0] - 3 e[1,0]``.
"""

import re
import typing as t
from fractions import Fraction

from vertexlab.base.exceptions import StateSyntaxError
from vertexlab.fock.state import FockMonomial, FockState, Terms, accumulate, normalize
from vertexlab.lattice.context import LatticeContext

_TOKEN = re.compile(
    r"""
    (?P<space>\s+)
    |(?P<scalar>\d+(?:\s*/\s*\d+)?)
    |(?P<mode>b(?P<index>\d+)\(\s*(?P<n>[+-]?\d+)\s*\))
    |(?P<point>e\[\s*(?P<coords>[+-]?\d+(?:\s*,\s*[+-]?\d+)*)\s*\])
    |(?P<op>[-+*])
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[re.Match[str]]:
    tokens: list[re.Match[str]] = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            msg = f"Unexpected input at offset {position}: `{text[position:position + 12]}`"
            raise StateSyntaxError(msg)
        if match.lastgroup != "space":
            tokens.append(match)
        position = match.end()
    return tokens


def parse_state(text: str, lattice: LatticeContext) -> FockState:
    """Parse the text form of a state.

    Raises
    ------
    StateSyntaxError
        If the text does not match the grammar
    StateError
        If a mode is not a creation mode or a basis index is out of range
    """
    tokens = _tokenize(text)
    if not tokens:
        raise StateSyntaxError("Empty state")

    terms: Terms = {}
    position = 0

    def peek(kind: str) -> re.Match[str] | None:
        if position < len(tokens) and tokens[position].lastgroup == kind:
            return tokens[position]
        return None

    sign = Fraction(1)
    if (op := peek("op")) and op.group() == "-":
        sign = Fraction(-1)
        position += 1

    while True:
        coeff = Fraction(1)
        has_scalar = False
        if scalar := peek("scalar"):
            try:
                coeff = Fraction(scalar.group().replace(" ", ""))
            except ZeroDivisionError as ex:
                msg = f"Zero denominator in coefficient `{scalar.group()}`"
                raise StateSyntaxError(msg) from ex
            has_scalar = True
            position += 1
            if (op := peek("op")) and op.group() == "*":
                position += 1

        modes: list[tuple[int, int]] = []
        while mode := peek("mode"):
            modes.append((int(mode.group("n")), int(mode.group("index")) - 1))
            position += 1

        if point := peek("point"):
            label = tuple(int(x) for x in point.group("coords").split(","))
            position += 1
        elif modes:
            raise StateSyntaxError(f"Modes {modes} are not followed by a lattice point")
        elif has_scalar:
            label = lattice.zero()
        else:
            raise StateSyntaxError(f"Expected a term at token {position + 1}")

        monomial = normalize(modes, label, lattice)
        accumulate(terms, monomial.terms, sign * coeff)

        if position == len(tokens):
            break
        op = peek("op")
        if op is None or op.group() == "*":
            raise StateSyntaxError(f"Expected `+` or `-` at token {position + 1}")
        sign = Fraction(1 if op.group() == "+" else -1)
        position += 1

    return FockState(lattice, terms)


def _format_scalar(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def format_monomial(mono: FockMonomial) -> str:
    point = "e[" + ",".join(str(x) for x in mono.label) + "]"
    return " ".join([*(f"b{j + 1}({n})" for n, j in mono.modes), point])


def _format_term(mono: FockMonomial, magnitude: Fraction) -> str:
    body = format_monomial(mono)
    if magnitude == 1:
        return body
    joiner = " * " if mono.modes else " "
    return f"{_format_scalar(magnitude)}{joiner}{body}"


def sorted_terms(state: FockState) -> list[tuple[FockMonomial, Fraction]]:
    """Terms in canonical order, by label then modes."""
    return sorted(state.terms.items(), key=lambda item: (item[0].label, item[0].modes))


def format_state(state: FockState) -> str:
    """Canonical text form; `parse_state` inverts it exactly."""
    pieces: list[str] = []
    for mono, coeff in sorted_terms(state):
        text = _format_term(mono, abs(coeff))
        if not pieces:
            pieces.append(f"-{text}" if coeff < 0 else text)
        else:
            pieces.append(f"{'-' if coeff < 0 else '+'} {text}")
    return " ".join(pieces) if pieces else "0"


def format_terms(lattice: LatticeContext, terms: t.Mapping[FockMonomial, Fraction]) -> str:
    return format_state(FockState(lattice, terms))
