"""Root systems of conformal subalgebras and their combinatorial closure.

A conformal subalgebra of a lattice vertex algebra spanned by components
V_λ has a symmetric support Δ that is closed under partial summation:
α + β ∈ Δ whenever α, β ∈ Δ and (α|β) < 0. `close` computes the smallest
such set containing a set of generators. For every non-orthogonal pair it
also applies the rank-2 table, which forces the extra roots of case (iii)
and the isotropic progressions of cases (v)-(viii). It stops with a witness
on any pair the table excludes.
"""

import dataclasses
import math
import typing as t
from collections import deque
from enum import StrEnum

from vertexlab.base.exceptions import RootSystemError
from vertexlab.base.log import LoggingMixin
from vertexlab.lattice.context import (
    Definiteness,
    LatticeContext,
    LatticePoint,
    add,
    neg,
    scale,
)
from vertexlab.roots.tables import Rank2Case, match_rank2, rank2_table

DEFAULT_MAX_NORM = 8
DEFAULT_MAX_ITER = 10_000
DEFAULT_WINDOW = 5


class ClosureStatus(StrEnum):
    """How a closure computation ended."""

    CLOSED_FINITE = "closed-finite"
    CLOSED_ALMOST_FINITE = "closed-almost-finite"
    DIVERGED = "diverged"
    TRUNCATED = "truncated"

    @property
    def closed(self) -> bool:
        return self in (ClosureStatus.CLOSED_FINITE, ClosureStatus.CLOSED_ALMOST_FINITE)


def independent(a: t.Sequence[int], b: t.Sequence[int]) -> bool:
    """Whether two integer vectors are linearly independent."""
    return any(
        a[i] * b[j] != a[j] * b[i] for i in range(len(a)) for j in range(i + 1, len(a))
    )


def canonical_direction(d: t.Sequence[int]) -> LatticePoint:
    """The sign of `d` whose first nonzero coordinate is positive."""
    for x in d:
        if x:
            return tuple(d) if x > 0 else neg(d)
    return tuple(d)


@dataclasses.dataclass(frozen=True)
class RootSystem:
    """A symmetric set of nonzero lattice points with its closure status.

    For almost finite systems `roots` holds the roots whose radical
    coordinates lie within `window`. Each direction in `progressions` is an
    isotropic δ along which the stored fibers continue as full cosets.
    """

    lattice: LatticeContext
    roots: frozenset[LatticePoint]
    status: ClosureStatus = ClosureStatus.CLOSED_FINITE
    progressions: frozenset[LatticePoint] = frozenset()
    window: int | None = None
    label: str | None = None
    witness: tuple[LatticePoint, ...] = ()

    def __post_init__(self) -> None:
        for root in self.roots:
            self.lattice.check(root)
            if not any(root):
                raise RootSystemError("The zero vector is not a root")

    @classmethod
    def of(
        cls, lattice: LatticeContext, roots: t.Iterable[t.Sequence[int]], **kwargs: t.Any
    ) -> "RootSystem":
        return cls(lattice, frozenset(tuple(int(x) for x in r) for r in roots), **kwargs)

    def __contains__(self, item: object) -> bool:
        return item in self.roots

    def __iter__(self) -> t.Iterator[LatticePoint]:
        return iter(sorted(self.roots))

    def __len__(self) -> int:
        return len(self.roots)

    def norm(self, root: LatticePoint) -> int:
        return int(self.lattice.norm(root))

    @property
    def real_roots(self) -> frozenset[LatticePoint]:
        """Δ^×, the roots of nonzero norm."""
        return frozenset(r for r in self.roots if self.lattice.norm(r))

    @property
    def isotropic_roots(self) -> frozenset[LatticePoint]:
        """Δ₀, the roots of norm zero."""
        return frozenset(r for r in self.roots if not self.lattice.norm(r))

    @property
    def is_finite(self) -> bool:
        return self.status == ClosureStatus.CLOSED_FINITE

    def in_window(self, point: LatticePoint) -> bool:
        """Whether `point` lies inside the stored window of radical coordinates."""
        if self.window is None:
            return True
        return _within(self.lattice, point, self.window)

    def is_symmetric(self) -> bool:
        return all(neg(r) in self.roots for r in self.roots)

    def missing_sums(self) -> list[tuple[LatticePoint, LatticePoint]]:
        """Pairs with (α|β) < 0 whose nonzero sum is in the window but not in Δ."""
        out = []
        roots = sorted(self.roots)
        for i, a in enumerate(roots):
            for b in roots[i:]:
                if self.lattice.inner(a, b) >= 0:
                    continue
                s = add(a, b)
                if any(s) and s not in self.roots and self.in_window(s):
                    out.append((a, b))
        return out

    def fibers(self) -> dict[LatticePoint, list[LatticePoint]]:
        """Radical coordinates of the stored roots over each quotient class."""
        out: dict[LatticePoint, list[LatticePoint]] = {}
        for root in sorted(self.roots):
            quotient, radical = self.lattice.coordinates(root)
            out.setdefault(quotient, []).append(radical)
        return out

    def with_label(self, label: str | None) -> "RootSystem":
        return dataclasses.replace(self, label=label)


def _within(lattice: LatticeContext, point: LatticePoint, window: int) -> bool:
    if lattice.definiteness == Definiteness.INDEFINITE:
        return True
    _, radical = lattice.coordinates(point)
    return all(abs(x) <= window for x in radical)


class _Stop(Exception):
    def __init__(self, status: ClosureStatus, witness: tuple[LatticePoint, ...]) -> None:
        super().__init__(status)
        self.status = status
        self.witness = witness


class _Closure(LoggingMixin):
    """Fixpoint iteration of partial summation and the rank-2 table."""

    def __init__(
        self,
        lattice: LatticeContext,
        max_norm: int,
        max_iter: int,
        window: int | None,
    ) -> None:
        self.lattice = lattice
        self.max_norm = max_norm
        self.max_iter = max_iter
        self.window = window
        self.roots: set[LatticePoint] = set()
        self.progressions: set[LatticePoint] = set()
        self.clipped = False
        self._pending: deque[LatticePoint] = deque()

    def _in_window(self, point: LatticePoint) -> bool:
        return self.window is None or _within(self.lattice, point, self.window)

    def add(self, point: LatticePoint) -> None:
        if not any(point) or point in self.roots:
            return
        if not self._in_window(point):
            self.clipped = True
            return
        norm = self.lattice.norm(point)
        if norm < 0:
            raise _Stop(ClosureStatus.DIVERGED, (point,))
        if norm > self.max_norm:
            raise _Stop(ClosureStatus.TRUNCATED, (point,))
        for p in (point, neg(point)):
            self.roots.add(p)
            self._pending.append(p)

    def _remember(self, delta: LatticePoint) -> None:
        delta = canonical_direction(delta)
        g = math.gcd(*delta)
        for known in list(self.progressions):
            if not independent(known, delta):
                if math.gcd(*known) <= g:
                    return
                self.progressions.discard(known)
        self.progressions.add(delta)

    def _table(self, a: LatticePoint, b: LatticePoint) -> None:
        na, nb, ab = (int(self.lattice.inner(x, y)) for x, y in ((a, a), (b, b), (a, b)))
        case, swapped = match_rank2(((na, ab), (ab, nb)))
        if case == Rank2Case.INADMISSIBLE:
            self.log.debug("Pair %s, %s matches no rank-2 case", a, b)
            raise _Stop(ClosureStatus.DIVERGED, (a, b))
        first, second = (b, a) if swapped else (a, b)

        def point(x: int, y: int) -> LatticePoint:
            return add(scale(x, first), scale(y, second))

        entry = rank2_table(case)
        if entry.delta is None:
            for x, y in entry.roots:
                self.add(point(x, y))
            return
        delta = point(*entry.delta)
        self._remember(delta)
        reach = self.window if self.window is not None else 1
        for x, y in entry.roots:
            base = point(x, y)
            for k in range(-reach, reach + 1):
                self.add(add(base, scale(k, delta)))
        for k in range(1, reach + 1):
            self.add(scale(k, delta))

    def run(self, gens: t.Sequence[LatticePoint]) -> RootSystem:
        try:
            for g in gens:
                self.add(g)
            iterations = 0
            while self._pending:
                iterations += 1
                if iterations > self.max_iter:
                    raise _Stop(ClosureStatus.TRUNCATED, ())
                a = self._pending.popleft()
                for b in sorted(self.roots):
                    if self.lattice.inner(a, b) >= 0:
                        continue
                    if independent(a, b):
                        self._table(a, b)
                    self.add(add(a, b))
        except _Stop as stop:
            self.log.info("Closure stopped: %s, witness %s", stop.status, stop.witness)
            return self._result(stop.status, stop.witness)

        status = ClosureStatus.CLOSED_FINITE
        if self.progressions or self.clipped:
            status = ClosureStatus.CLOSED_ALMOST_FINITE
        self.log.debug("Closure reached %d roots, %s", len(self.roots), status)
        return self._result(status, ())

    def _result(self, status: ClosureStatus, witness: tuple[LatticePoint, ...]) -> RootSystem:
        return RootSystem(
            self.lattice,
            frozenset(self.roots),
            status=status,
            progressions=frozenset(self.progressions),
            window=self.window,
            witness=witness,
        )


def close(
    gens: t.Iterable[t.Sequence[int]],
    lattice: LatticeContext,
    max_norm: int = DEFAULT_MAX_NORM,
    max_iter: int = DEFAULT_MAX_ITER,
    window: int | None = DEFAULT_WINDOW,
) -> RootSystem:
    """Smallest symmetric set containing `gens` closed under partial summation.

    Parameters
    ----------
    gens : Iterable[Sequence[int]]
        Generating lattice points
    lattice : LatticeContext
        The ambient lattice
    max_norm : int
        Roots above this norm stop the iteration with status `truncated`
    max_iter : int
        Bound on the number of processed roots
    window : int | None
        Bound on the radical coordinates of stored roots; None stores everything

    Raises
    ------
    RootSystemError
        If no generator is given or a generator is zero

    Returns
    -------
    RootSystem
    """
    points = [tuple(int(x) for x in g) for g in gens]
    if not points:
        raise RootSystemError("A root system needs at least one generator")
    for p in points:
        lattice.check(p)
        if not any(p):
            raise RootSystemError("The zero vector is not a root")
    return _Closure(lattice, max_norm, max_iter, window).run(sorted(points))
