import typing as t
from enum import StrEnum
from fractions import Fraction

import sympy

from vertexlab.base.exceptions import LatticeError, LatticeMismatchError
from vertexlab.foundation.scalars import Scalar, as_scalar

LatticePoint: t.TypeAlias = tuple[int, ...]
"""Integer coordinates in the fixed lattice basis."""

CoVector: t.TypeAlias = tuple[Fraction, ...]
"""Rational coordinates of an element of the Cartan space."""

Vector: t.TypeAlias = t.Sequence[int] | t.Sequence[Fraction]


class Definiteness(StrEnum):
    """Sign behavior of the bilinear form."""

    POSITIVE = "positive-definite"
    SEMI_POSITIVE = "semi-positive-definite"
    INDEFINITE = "indefinite"


def _row_reduce(gram: tuple[tuple[int, ...], ...]) -> tuple[list[list[int]], int]:
    """Integer row reduction of `gram` tracking the unimodular transform.

    Returns the transform `U` with `U @ gram` in row echelon form together with
    the number `r` of nonzero rows; rows `r..` of `U` span the integer kernel.
    """
    n = len(gram)
    m = [list(row) for row in gram]
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap(a: int, b: int) -> None:
        m[a], m[b] = m[b], m[a]
        u[a], u[b] = u[b], u[a]

    def subtract(target: int, source: int, q: int) -> None:
        m[target] = [x - q * y for x, y in zip(m[target], m[source])]
        u[target] = [x - q * y for x, y in zip(u[target], u[source])]

    pivot = 0
    for col in range(n):
        if pivot == n:
            break
        while True:
            nonzero = [r for r in range(pivot, n) if m[r][col]]
            if not nonzero:
                break
            best = min(nonzero, key=lambda r: abs(m[r][col]))
            swap(pivot, best)
            others = [r for r in range(pivot + 1, n) if m[r][col]]
            if not others:
                break
            for r in others:
                subtract(r, pivot, m[r][col] // m[pivot][col])
        if m[pivot][col]:
            pivot += 1

    return u, pivot


class LatticeContext:
    """An integer lattice with a symmetric bilinear form given by its Gram matrix.

    All derived data (sign cocycle, radical, quotient basis, definiteness) is
    computed at construction time; instances are immutable and hashable by
    their Gram matrix.
    """

    __slots__ = (
        "_gram",
        "_cocycle",
        "_transform",
        "_inverse_transform",
        "_quotient_rank",
        "_quotient_gram",
        "_definiteness",
        "_gram_inverse",
    )

    def __init__(self, gram: t.Sequence[t.Sequence[int]]) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in gram)
        n = len(rows)
        if n == 0:
            raise LatticeError("A lattice needs a positive rank")
        if any(len(row) != n for row in rows):
            msg = f"Gram matrix must be square, got {[len(r) for r in rows]} columns"
            raise LatticeError(msg)
        if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(n)):
            raise LatticeError("Gram matrix must be symmetric")

        self._gram = rows
        self._cocycle = tuple(
            tuple(
                (rows[i][i] * rows[j][j] + rows[i][j]) % 2 if i > j else 0
                for j in range(n)
            )
            for i in range(n)
        )

        transform, quotient_rank = _row_reduce(rows)
        self._transform = tuple(tuple(row) for row in transform)
        inverse = sympy.Matrix(transform).inv()
        self._inverse_transform = tuple(
            tuple(int(inverse[i, j]) for j in range(n)) for i in range(n)
        )
        self._quotient_rank = quotient_rank
        self._quotient_gram = tuple(
            tuple(
                int(self._inner_int(transform[a], transform[b]))
                for b in range(quotient_rank)
            )
            for a in range(quotient_rank)
        )
        self._definiteness = self._classify()

        matrix = sympy.Matrix(rows)
        self._gram_inverse: tuple[tuple[Fraction, ...], ...] | None = None
        if quotient_rank == n:
            inv = matrix.inv()
            self._gram_inverse = tuple(
                tuple(as_scalar(inv[i, j]) for j in range(n)) for i in range(n)
            )

    def _inner_int(self, a: t.Sequence[int], b: t.Sequence[int]) -> int:
        g = self._gram
        return sum(
            a[i] * g[i][j] * b[j]
            for i in range(len(a))
            if a[i]
            for j in range(len(b))
            if b[j]
        )

    def _classify(self) -> Definiteness:
        q = sympy.Matrix(self._quotient_gram) if self._quotient_rank else None
        if q is not None and any(
            q[:k, :k].det() <= 0 for k in range(1, self._quotient_rank + 1)
        ):
            return Definiteness.INDEFINITE
        if self._quotient_rank == self.rank:
            return Definiteness.POSITIVE
        return Definiteness.SEMI_POSITIVE

    @property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        return self._gram

    @property
    def rank(self) -> int:
        return len(self._gram)

    @property
    def definiteness(self) -> Definiteness:
        return self._definiteness

    @property
    def is_degenerate(self) -> bool:
        return self._gram_inverse is None

    @property
    def quotient_rank(self) -> int:
        return self._quotient_rank

    @property
    def quotient_gram(self) -> tuple[tuple[int, ...], ...]:
        """Gram matrix of the image of the lattice in the quotient by the radical."""
        return self._quotient_gram

    def check(self, a: Vector) -> None:
        """Reject vectors whose length differs from the rank."""
        if len(a) != self.rank:
            msg = f"Vector {tuple(a)} does not belong to a rank-{self.rank} lattice"
            raise LatticeMismatchError(msg)

    def zero(self) -> LatticePoint:
        return (0,) * self.rank

    def basis(self, j: int) -> LatticePoint:
        return tuple(int(i == j) for i in range(self.rank))

    def inner(self, a: Vector, b: Vector) -> Scalar:
        """The bilinear form aᵀ·G·b."""
        self.check(a)
        self.check(b)
        g = self._gram
        return Fraction(
            sum(
                (a[i] * g[i][j] * b[j] for i in range(self.rank) for j in range(self.rank)),
                start=Fraction(0),
            )
        )

    def norm(self, a: Vector) -> Scalar:
        return self.inner(a, a)

    def pairing(self, h: Vector, j: int) -> Scalar:
        """(h | e_j)."""
        self.check(h)
        return Fraction(
            sum((h[i] * self._gram[i][j] for i in range(self.rank)), start=Fraction(0))
        )

    def epsilon(self, a: LatticePoint, b: LatticePoint) -> int:
        """The bimultiplicative sign cocycle.

        Fixed on the basis by ε(e_i, e_j) = 1 for i <= j, the remaining values
        being forced by ε(a,b) = (-1)^{(a|a)(b|b) + (a|b)} ε(b,a).
        """
        self.check(a)
        self.check(b)
        c = self._cocycle
        exponent = sum(
            a[i] * b[j]
            for i in range(self.rank)
            if a[i]
            for j in range(i)
            if b[j] and c[i][j]
        )
        return -1 if exponent % 2 else 1

    def radical(self) -> list[LatticePoint]:
        """A ℤ-basis of the vectors orthogonal to the whole lattice."""
        return [tuple(row) for row in self._transform[self._quotient_rank :]]

    def coordinates(self, a: LatticePoint) -> tuple[LatticePoint, LatticePoint]:
        """Split `a` into coordinates along the quotient basis and the radical basis."""
        self.check(a)
        inv = self._inverse_transform
        y = tuple(
            sum(a[i] * inv[i][k] for i in range(self.rank)) for k in range(self.rank)
        )
        return y[: self._quotient_rank], y[self._quotient_rank :]

    def from_coordinates(
        self, quotient: t.Sequence[int], radical: t.Sequence[int]
    ) -> LatticePoint:
        """Inverse of `coordinates`."""
        y = (*quotient, *radical)
        self.check(y)
        u = self._transform
        return tuple(
            sum(y[k] * u[k][i] for k in range(self.rank)) for i in range(self.rank)
        )

    def project(self, a: LatticePoint) -> LatticePoint:
        """Image of `a` in the positive definite quotient by the radical.

        Raises
        ------
        LatticeError
            If the form is indefinite
        """
        if self._definiteness == Definiteness.INDEFINITE:
            raise LatticeError("The quotient by the radical is only defined for semi-positive forms")
        return self.coordinates(a)[0]

    def quotient_inner(self, a: t.Sequence[int], b: t.Sequence[int]) -> int:
        """The induced form on quotient coordinates."""
        q = self._quotient_gram
        r = self._quotient_rank
        return sum(a[i] * q[i][j] * b[j] for i in range(r) for j in range(r))

    def dual_basis(self) -> list[CoVector]:
        """Covectors h_i with (h_i | e_j) = δ_ij.

        Raises
        ------
        LatticeError
            If the form is degenerate
        """
        if self._gram_inverse is None:
            raise LatticeError("A degenerate lattice has no dual basis")
        return [tuple(row) for row in self._gram_inverse]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticeContext):
            return NotImplemented
        return self._gram == other._gram

    def __hash__(self) -> int:
        return hash(self._gram)

    def __repr__(self) -> str:
        return f"LatticeContext({[list(r) for r in self._gram]})"


def add(a: t.Sequence[int], b: t.Sequence[int]) -> LatticePoint:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def neg(a: t.Sequence[int]) -> LatticePoint:
    return tuple(-x for x in a)


def scale(k: int, a: t.Sequence[int]) -> LatticePoint:
    return tuple(k * x for x in a)
