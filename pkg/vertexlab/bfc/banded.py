"""Infinite matrices with finitely many nonzero diagonals.

A banded matrix Σ_d Σ_i q_d(i) E_{i,i+d} stores one polynomial per offset d.
Products compose diagonals:

    (Σ a_d(i) E_{i,i+d}) (Σ b_e(j) E_{j,j+e}) = Σ a_d(i) b_e(i+d) E_{i,i+d+e}

The central extension uses φ(A, B) = tr([A, J] B) with J = Σ_{i<0} E_ii.
"""

import typing as t
from dataclasses import dataclass, field
from fractions import Fraction

from vertexlab.foundation.polynomial import IntPoly
from vertexlab.foundation.scalars import Scalar, ScalarLike, as_scalar, gbinom, sign


@dataclass(frozen=True)
class BandedMatrix:
    """Σ_d Σ_i q_d(i) E_{i,i+d} plus an optional multiple of the central element."""

    diagonals: t.Mapping[int, IntPoly] = field(default_factory=dict)
    central: Scalar = Fraction(0)

    def __post_init__(self) -> None:
        trimmed = {d: q for d, q in self.diagonals.items() if not q.is_zero}
        object.__setattr__(self, "diagonals", dict(sorted(trimmed.items())))
        object.__setattr__(self, "central", as_scalar(self.central))

    @classmethod
    def diagonal(cls, d: int, q: IntPoly) -> "BandedMatrix":
        return cls({d: q})

    @property
    def offsets(self) -> list[int]:
        return list(self.diagonals)

    def entry(self, i: int, j: int) -> Scalar:
        q = self.diagonals.get(j - i)
        return q(i) if q is not None else Fraction(0)

    def __add__(self, other: "BandedMatrix") -> "BandedMatrix":
        merged = dict(self.diagonals)
        for d, q in other.diagonals.items():
            merged[d] = merged[d] + q if d in merged else q
        return BandedMatrix(merged, self.central + other.central)

    def __neg__(self) -> "BandedMatrix":
        return BandedMatrix({d: -q for d, q in self.diagonals.items()}, -self.central)

    def __sub__(self, other: "BandedMatrix") -> "BandedMatrix":
        return self + (-other)

    def scale(self, c: ScalarLike) -> "BandedMatrix":
        return BandedMatrix({d: q.scale(c) for d, q in self.diagonals.items()}, self.central * as_scalar(c))

    def __matmul__(self, other: "BandedMatrix") -> "BandedMatrix":
        out: dict[int, IntPoly] = {}
        for d, a in self.diagonals.items():
            for e, b in other.diagonals.items():
                term = a * b.shift(d)
                out[d + e] = out[d + e] + term if d + e in out else term
        return BandedMatrix(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BandedMatrix):
            return NotImplemented
        return self.diagonals == other.diagonals and self.central == other.central

    def __hash__(self) -> int:
        return hash((tuple(self.diagonals.items()), self.central))


IDENTITY: t.Final[BandedMatrix] = BandedMatrix({0: IntPoly(1)})


def mbracket(a: BandedMatrix, b: BandedMatrix) -> BandedMatrix:
    """The commutator AB - BA, without central term."""
    return a @ b - b @ a


def mcocycle(a: BandedMatrix, b: BandedMatrix) -> Scalar:
    """φ(A, B) as a finite window sum over the offsets that cancel."""
    total = Fraction(0)
    for d, q in a.diagonals.items():
        r = b.diagonals.get(-d)
        if r is None:
            continue
        if d < 0:
            total += sum((q(i) * r(i + d) for i in range(0, -d)), Fraction(0))
        elif d > 0:
            total -= sum((q(i) * r(i + d) for i in range(-d, 0)), Fraction(0))
    return total


def hat_bracket(a: BandedMatrix, b: BandedMatrix) -> BandedMatrix:
    """The bracket of the central extension: [A, B] + φ(A, B) c."""
    return BandedMatrix(mbracket(a, b).diagonals, mcocycle(a, b))


def phi_elementary(i: int, j: int, k: int, q: int) -> int:
    """φ(E_ij, E_kq) on elementary matrices."""
    if i != q or j != k:
        return 0
    if j < 0 <= i:
        return 1
    if i < 0 <= j:
        return -1
    return 0


def mcocycle_truncated(a: BandedMatrix, b: BandedMatrix, window: int = 20) -> Scalar:
    """φ(A, B) by summing φ(E_ij, E_ji) over all entries with |i|, |j| ≤ window."""
    total = Fraction(0)
    span = range(-window, window + 1)
    for i in span:
        for j in span:
            if c := phi_elementary(i, j, j, i):
                total += c * a.entry(i, j) * b.entry(j, i)
    return total


def weyl_to_matrix(m: int, n: int) -> BandedMatrix:
    """p_m(n) = p^m t^n / m! = (-1)^m Σ_i C(i+m, m) E_{i,i+m-n}.

    Raises
    ------
    ValueError
        If `m` is negative
    """
    if m < 0:
        raise ValueError(f"p_m(n) needs m >= 0, got {m}")
    return BandedMatrix.diagonal(m - n, IntPoly.binomial(m).scale(sign(m)))


def weyl_cocycle(m: int, k: int, n: int, q: int) -> Scalar:
    """φ(p_m(k), p_n(q)) = δ_{m+n,k+q} (-1)^m C(k, m+n+1) of the Weyl algebra."""
    if m + n != k + q:
        return Fraction(0)
    return sign(m) * gbinom(k, m + n + 1)
