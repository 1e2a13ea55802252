"""The rank-1 and rank-2 tables of conformal root systems.

A single root α of norm (α|α) = 1, 2, 3, 4 generates the Clifford conformal
superalgebra, affine sl2, the centrally extended N=2 algebra and the
superalgebra 𝔎̂ respectively; from norm 5 on the generated algebra is the
whole V_ℤα. Two roots with (α|β) < 0 fit one of eight Gram matrices, and any
other choice gives an infinite root system.
"""

import dataclasses
import typing as t
from enum import StrEnum

from vertexlab.base.exceptions import RootSystemError

RootCoefficients: t.TypeAlias = tuple[int, int]
"""Coordinates of a root in the basis (α, β) of a rank-2 case."""


@dataclasses.dataclass(frozen=True, order=True)
class ClassificationLabel:
    """Type of an indecomposable positive definite root system.

    `kind` is one of A, D, E, B, C, BC, B0 or B1prime; B1prime has no rank.
    """

    kind: str
    rank: int | None = None

    def __str__(self) -> str:
        if self.rank is None:
            return self.kind
        return f"{self.kind}({self.rank})"


B1_PRIME = ClassificationLabel("B1prime")


@dataclasses.dataclass(frozen=True)
class Rank1Entry:
    norm: int
    label: ClassificationLabel | None
    """None when the generated algebra is not supported on {±α}."""
    algebra: str
    """Name of the conformal presentation realized by v_{±α}, or `lattice`."""

    @property
    def finite(self) -> bool:
        return self.label is not None


_RANK1 = {
    1: Rank1Entry(1, ClassificationLabel("B", 1), "clifford"),
    2: Rank1Entry(2, ClassificationLabel("A", 1), "sl2"),
    3: Rank1Entry(3, B1_PRIME, "n2"),
    4: Rank1Entry(4, ClassificationLabel("C", 1), "tkk"),
}


def classify_rank1(norm: int) -> Rank1Entry:
    """The conformal algebra generated by v_{±α} for (α|α) = `norm`.

    Raises
    ------
    RootSystemError
        If the norm is not positive
    """
    if norm <= 0:
        msg = f"A rank-1 root needs a positive norm, got {norm}"
        raise RootSystemError(msg)
    return _RANK1.get(norm, Rank1Entry(norm, None, "lattice"))


class Rank2Case(StrEnum):
    I = "i"  # noqa: E741
    II = "ii"
    III = "iii"
    IV = "iv"
    V = "v"
    VI = "vi"
    VII = "vii"
    VIII = "viii"
    ORTHOGONAL = "orthogonal"
    INADMISSIBLE = "inadmissible"


@dataclasses.dataclass(frozen=True)
class Rank2Entry:
    case: Rank2Case
    gram: tuple[tuple[int, int], tuple[int, int]]
    zero_rank: int | None
    """Rank over 𝕜[D] of the zero-label component; None when infinite."""
    isotropic_rank: int | None
    """Rank over 𝕜[D] of the isotropic part; None when infinite, 0 without one."""
    delta: RootCoefficients | None
    """The isotropic δ of an almost finite case."""
    roots: tuple[RootCoefficients, ...]
    """All roots of a finite case, or the roots whose δ-translates form Δ."""

    @property
    def finite(self) -> bool:
        return self.delta is None


_PM = ((1, 0), (-1, 0), (0, 1), (0, -1))
_TRIANGLE = (*_PM, (1, 1), (-1, -1))

_RANK2 = {
    entry.case: entry
    for entry in (
        Rank2Entry(Rank2Case.I, ((2, -1), (-1, 2)), 2, 0, None, _TRIANGLE),
        Rank2Entry(Rank2Case.II, ((2, -1), (-1, 1)), 1, 0, None, _TRIANGLE),
        Rank2Entry(
            Rank2Case.III, ((4, -2), (-2, 2)), None, 0, None, (*_TRIANGLE, (1, 2), (-1, -2))
        ),
        Rank2Entry(Rank2Case.IV, ((1, -1), (-1, 1)), 0, 1, None, _TRIANGLE),
        Rank2Entry(Rank2Case.V, ((2, -2), (-2, 2)), 2, 2, (1, 1), _PM),
        Rank2Entry(Rank2Case.VI, ((3, -3), (-3, 3)), 4, 3, (1, 1), _PM),
        Rank2Entry(Rank2Case.VII, ((4, -4), (-4, 4)), None, None, (1, 1), _PM),
        Rank2Entry(Rank2Case.VIII, ((4, -2), (-2, 1)), None, None, (1, 2), _PM),
    )
}


def rank2_table(case: Rank2Case | str) -> Rank2Entry:
    """The Gram matrix, ranks and roots of one of the cases (i)-(viii).

    Raises
    ------
    RootSystemError
        If `case` is not one of the eight admissible cases
    """
    try:
        return _RANK2[Rank2Case(case)]
    except (KeyError, ValueError):
        msg = f"No rank-2 table entry for case {case!r}"
        raise RootSystemError(msg) from None


def match_rank2(gram: t.Sequence[t.Sequence[int]]) -> tuple[Rank2Case, bool]:
    """Match a 2×2 Gram matrix against the table up to swapping α and β.

    The second value tells whether the match needed the swap. A positive
    (α|β) is matched through the pair (α, -β).

    Raises
    ------
    RootSystemError
        If `gram` is not a symmetric 2×2 matrix
    """
    if len(gram) != 2 or any(len(row) != 2 for row in gram) or gram[0][1] != gram[1][0]:
        msg = f"Expected a symmetric 2x2 Gram matrix, got {gram}"
        raise RootSystemError(msg)
    a, b, c = int(gram[0][0]), -abs(int(gram[0][1])), int(gram[1][1])
    if not b:
        return Rank2Case.ORTHOGONAL, False
    for entry in _RANK2.values():
        (x, y), (_, z) = entry.gram
        if (x, y, z) == (a, b, c):
            return entry.case, False
        if (x, y, z) == (c, b, a):
            return entry.case, True
    return Rank2Case.INADMISSIBLE, False


def classify_rank2(gram: t.Sequence[t.Sequence[int]]) -> Rank2Case:
    """The case (i)-(viii) of a pair of roots, or `inadmissible`."""
    return match_rank2(gram)[0]
