"""The support of the conformal subalgebra generated by vertex states.

The subalgebra generated by {v_γ : γ ∈ ±gens} is the 𝕜[D]-span of iterated
n-th products, n ≥ 0. Since (Dx)∟n y = -n x∟(n-1) y and products in the other
order follow from quasi-symmetry, it suffices to multiply the vectors found
as products, never their derivatives. Every component (λ, degree) up to the
degree cap is kept as an echelon basis of Fock states.
"""

import dataclasses
import functools
import heapq
import itertools
import math
import typing as t
from collections import defaultdict
from fractions import Fraction

from vertexlab.base.exceptions import RootSystemError
from vertexlab.base.log import LoggingMixin
from vertexlab.base.utils import parallel_map
from vertexlab.fock.engine import derive, product, product_bound
from vertexlab.fock.state import FockMonomial, FockState
from vertexlab.foundation.scalars import ScalarLike, as_scalar
from vertexlab.lattice.context import LatticeContext, LatticePoint, add, neg

ComponentKey: t.TypeAlias = tuple[LatticePoint, Fraction]


@dataclasses.dataclass(frozen=True)
class SupportResult:
    lattice: LatticeContext
    degree_cap: Fraction
    dimensions: dict[ComponentKey, int]
    """Dimension of the generated subalgebra in each (label, degree) component."""

    @property
    def labels(self) -> frozenset[LatticePoint]:
        return frozenset(label for (label, _), dim in self.dimensions.items() if dim)

    @property
    def roots(self) -> frozenset[LatticePoint]:
        """The nonzero labels."""
        return frozenset(label for label in self.labels if any(label))

    def dimension(self, label: t.Sequence[int], degree: ScalarLike) -> int:
        return self.dimensions.get((tuple(label), as_scalar(degree)), 0)

    def rank(self, label: t.Sequence[int], upto: ScalarLike | None = None) -> int:
        """Number of 𝕜[D]-free generators of the λ-component found up to a degree.

        D is injective on every component except on the vacuum, which spans
        a torsion submodule and is not counted.
        """
        label = tuple(label)
        top = self.degree_cap if upto is None else as_scalar(upto)
        vacuum = self.dimension(label, 0) if not any(label) else 0
        degrees = sorted(d for (lab, d) in self.dimensions if lab == label and d <= top)
        total = 0
        for d in degrees:
            below = self.dimension(label, d - 1)
            if d == 1:
                below -= vacuum
            total += self.dimension(label, d) - below
        return total - vacuum


def fock_dimension(rank: int, depth: int) -> int:
    """Number of Fock monomials of a given depth over a rank-`rank` lattice."""
    if depth < 0:
        return 0
    return _colored_partitions(rank, depth)


@functools.cache
def _colored_partitions(rank: int, depth: int) -> int:
    # coefficient of q^depth in Π_j (1 - q^j)^(-rank)
    counts = [1] + [0] * depth
    for j in range(1, depth + 1):
        for _ in range(rank):
            for m in range(j, depth + 1):
                counts[m] += counts[m - j]
    return counts[depth]


@dataclasses.dataclass(frozen=True)
class _Pending:
    state: FockState
    primitive: bool


@dataclasses.dataclass(frozen=True)
class _Task:
    left: FockState
    n: int
    right: FockState

    @property
    def key(self) -> ComponentKey:
        degree = self.left.degree + self.right.degree - self.n - 1
        return add(self.left.label, self.right.label), degree


_Entry: t.TypeAlias = tuple[Fraction, int, int, _Pending | _Task]


class _SupportClosure(LoggingMixin):
    """Closure in order of increasing degree.

    A product is computed only while its target component is smaller than the
    matching component of V_L; a full component cannot grow.
    """

    def __init__(self, lattice: LatticeContext, cap: Fraction) -> None:
        self.lattice = lattice
        self.cap = cap
        self.spaces: dict[ComponentKey, dict[FockMonomial, FockState]] = defaultdict(dict)
        self.generators: list[FockState] = []
        self.computed = 0
        self._queue: list[_Entry] = []
        self._counter = itertools.count()

    def _push(self, degree: Fraction, item: _Pending | _Task) -> None:
        # pending states sort before products of the same degree
        order = 1 if isinstance(item, _Task) else 0
        heapq.heappush(self._queue, (degree, order, next(self._counter), item))

    def missing(self, key: ComponentKey) -> int:
        """Dimension still missing from a component, compared with V_L."""
        label, degree = key
        depth = degree - self.lattice.norm(label) / 2
        if depth.denominator != 1:
            return 0
        return fock_dimension(self.lattice.rank, int(depth)) - len(self.spaces.get(key, ()))

    def _insert(self, v: FockState) -> FockState | None:
        """Reduce v against its component and add the remainder as a new row."""
        space = self.spaces[(v.label, v.degree)]
        for pivot, row in space.items():
            if c := v.coefficient(pivot):
                v = v - row * c
        if not v:
            return None
        pivot = max(mono for mono, _ in v)
        v = v * (1 / v.coefficient(pivot))
        for key in list(space):
            if c := space[key].coefficient(pivot):
                space[key] = space[key] - v * c
        space[pivot] = v
        return v

    def _add(self, v: FockState, primitive: bool) -> None:
        for (_, degree), part in sorted(v.components().items()):
            if degree > self.cap:
                continue
            row = self._insert(part)
            if row is None:
                continue
            if degree + 1 <= self.cap:
                self._push(degree + 1, _Pending(derive(row), primitive=False))
            if primitive:
                self.generators.append(row)
                self._queue_products(row)

    def _queue_products(self, x: FockState) -> None:
        for y in self.generators:
            top = product_bound(x, y)
            if top is None:
                continue
            low = max(0, math.ceil(x.degree + y.degree - 1 - self.cap))
            for n in range(low, top + 1):
                task = _Task(x, n, y)
                self._push(task.key[1], task)

    def _batch(self) -> list[_Task]:
        """Products of the lowest queued degree, at most as many per component as it lacks."""
        degree = self._queue[0][0]
        batch: list[_Task] = []
        deferred: list[_Entry] = []
        budget: dict[ComponentKey, int] = {}
        while self._queue and self._queue[0][0] == degree and self._queue[0][1] == 1:
            entry = heapq.heappop(self._queue)
            task = t.cast(_Task, entry[3])
            key = task.key
            if key not in budget:
                budget[key] = self.missing(key)
            if budget[key] > 0:
                budget[key] -= 1
                batch.append(task)
            elif self.missing(key) > 0:
                deferred.append(entry)
        for entry in deferred:
            heapq.heappush(self._queue, entry)
        return batch

    def run(self, seeds: t.Sequence[LatticePoint]) -> SupportResult:
        for p in seeds:
            state = FockState.vertex(self.lattice, p)
            self._push(state.degree, _Pending(state, primitive=True))

        while self._queue:
            item = self._queue[0][3]
            if isinstance(item, _Pending):
                heapq.heappop(self._queue)
                self._add(item.state, item.primitive)
                continue
            batch = self._batch()
            self.computed += len(batch)
            results = parallel_map(lambda task: product(task.left, task.n, task.right), batch)
            for result in results:
                if result:
                    self._add(result, primitive=True)

        dimensions = {key: len(space) for key, space in self.spaces.items() if space}
        self.log.info(
            "Support closure up to degree %s: %d generators, %d products, %d components",
            self.cap,
            len(self.generators),
            self.computed,
            len(dimensions),
        )
        return SupportResult(self.lattice, self.cap, dimensions)


def support_closure(
    gens: t.Iterable[t.Sequence[int]],
    lattice: LatticeContext,
    degree_cap: ScalarLike,
) -> SupportResult:
    """Support of the conformal subalgebra generated by v_{±γ}, up to a degree.

    Raises
    ------
    RootSystemError
        If a generator is zero or lies above the degree cap
    """
    points = {tuple(int(x) for x in g) for g in gens}
    if not points:
        raise RootSystemError("Support closure needs at least one generator")
    for p in points:
        lattice.check(p)
        if not any(p):
            raise RootSystemError("The zero vector is not a root")
    seeds = sorted(points | {neg(p) for p in points})
    cap = as_scalar(degree_cap)
    top = max(lattice.norm(p) / 2 for p in seeds)
    if cap < top:
        msg = f"Degree cap {cap} is below the generator degree {top}"
        raise RootSystemError(msg)
    return _SupportClosure(lattice, cap).run(seeds)
