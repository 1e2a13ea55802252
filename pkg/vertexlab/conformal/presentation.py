"""Conformal (super)algebras given by generators and n-th products.

A presentation only answers g∟k h for generators g, h and 0 ≤ k below the
locality bound. Everything else follows from the axioms:

    (Da)∟n b = -n a∟(n-1) b        a∟n (Db) = D(a∟n b) + n a∟(n-1) b

which are applied in closed form through the λ-bracket
[D^α g_λ D^β h] = (-λ)^α (D+λ)^β [g_λ h].
"""

import abc
import math
import threading
import typing as t
from dataclasses import dataclass
from fractions import Fraction

from vertexlab.base.exceptions import PresentationError
from vertexlab.base.log import LoggingMixin
from vertexlab.conformal.element import CENTRAL, CoeffElement, ConformalElement
from vertexlab.foundation.scalars import binom, gbinom, sign

ProductKey: t.TypeAlias = tuple[str, int, str]


@dataclass(frozen=True)
class Generator:
    """A generator of a presentation."""

    id: str
    parity: int
    degree: Fraction


CENTRAL_GENERATOR: t.Final[Generator] = Generator(CENTRAL, 0, Fraction(0))


class ConformalPresentation(abc.ABC, LoggingMixin):
    """A conformal superalgebra presented by its products on generators."""

    def __init__(self, name: str) -> None:
        self.name = name
        self._cache: dict[ProductKey, ConformalElement] = {}
        self._lock = threading.Lock()

    @abc.abstractmethod
    def generator(self, gid: str) -> Generator:
        """Look up a generator by id.

        Raises
        ------
        PresentationError
            If the id does not name a generator
        """

    @abc.abstractmethod
    def generators(self, max_gen: int) -> list[str]:
        """Non-central generator ids with family index at most `max_gen`."""

    @abc.abstractmethod
    def _stored(self, g: str, k: int, h: str) -> ConformalElement:
        """g∟k h for independent, non-central generators g and h."""

    def canonical(self, gid: str) -> ConformalElement:
        """Express a generator in terms of independent generators."""
        self.generator(gid)
        return ConformalElement.generator(gid)

    def element(self, gid: str, coeff: int | Fraction = 1) -> ConformalElement:
        return self.canonical(gid) * coeff

    def parity(self, x: ConformalElement) -> int:
        """Parity of a parity-homogeneous element (0 for zero)."""
        parities = {self.generator(g).parity for g, _ in x.terms}
        if len(parities) > 1:
            raise PresentationError(f"Element {x} is not parity homogeneous")
        return parities.pop() if parities else 0

    def degree_of(self, gid: str, k: int) -> Fraction:
        return self.generator(gid).degree + k

    def locality(self, g: str, h: str) -> int:
        """g∟n h vanishes for every n at or above this bound."""
        if CENTRAL in (g, h):
            return 0
        return math.floor(self.generator(g).degree + self.generator(h).degree)

    def raw_product(self, g: str, k: int, h: str) -> ConformalElement:
        """g∟k h from the table alone, without truncating by locality."""
        if CENTRAL in (g, h):
            return ConformalElement()
        cg, ch = self.canonical(g), self.canonical(h)
        if cg == ConformalElement.generator(g) and ch == ConformalElement.generator(h):
            return self._stored(g, k, h)
        return self.cproduct(cg, k, ch)

    def gproduct(self, g: str, k: int, h: str) -> ConformalElement:
        """g∟k h for generators, cached."""
        if k < 0:
            raise ValueError(f"Conformal products are defined for k >= 0, got {k}")
        if k >= self.locality(g, h):
            return ConformalElement()
        key = (g, k, h)
        with self._lock:
            cached = self._cache.get(key)
        if cached is None:
            cached = self.raw_product(g, k, h)
            with self._lock:
                self._cache[key] = cached
        return cached

    def cproduct(self, x: ConformalElement, n: int, y: ConformalElement) -> ConformalElement:
        """x∟n y for arbitrary elements, n ≥ 0."""
        out = ConformalElement()
        for (g, a), cx in x.terms.items():
            for (h, b), cy in y.terms.items():
                for k in range(self.locality(g, h)):
                    r = a + b + k - n
                    if r < 0 or r > b:
                        continue
                    inner = self.gproduct(g, k, h)
                    if inner:
                        scale = Fraction(math.factorial(n) * sign(a) * binom(b, r), math.factorial(k))
                        out = out + inner.derive(r) * (scale * cx * cy)
        return out

    def qs(self, h: str, n: int, g: str) -> ConformalElement:
        """g∟n h rebuilt from the products h∟k g by quasisymmetry."""
        out = ConformalElement()
        for j in range(self.locality(h, g) - n):
            term = self.gproduct(h, n + j, g).derive(j)
            out = out + term * Fraction(sign(n + j), math.factorial(j))
        koszul = sign(self.generator(g).parity * self.generator(h).parity)
        return out * -koszul


class TablePresentation(ConformalPresentation):
    """A presentation with finitely many generators and a stored product table.

    Pairs stored in only one order are completed by quasisymmetry.
    """

    def __init__(
        self,
        name: str,
        generators: t.Sequence[Generator],
        table: t.Mapping[ProductKey, ConformalElement],
    ) -> None:
        super().__init__(name)
        self._generators = {g.id: g for g in generators}
        self._generators.setdefault(CENTRAL, CENTRAL_GENERATOR)
        for g, k, h in table:
            if g not in self._generators or h not in self._generators:
                raise PresentationError(f"Table entry ({g}, {k}, {h}) uses an unknown generator")
            if k < 0:
                raise PresentationError(f"Table entry ({g}, {k}, {h}) has a negative index")
            unknown = [gid for gid, _ in table[(g, k, h)].terms if gid not in self._generators]
            if unknown:
                raise PresentationError(f"Table entry ({g}, {k}, {h}) produces unknown generators {unknown}")
        self._table = dict(table)
        self._pairs = {(g, h) for g, _, h in table}

    def generator(self, gid: str) -> Generator:
        try:
            return self._generators[gid]
        except KeyError:
            raise PresentationError(f"{self.name} has no generator {gid!r}") from None

    def generators(self, max_gen: int = 0) -> list[str]:
        return [g for g in self._generators if g != CENTRAL]

    @property
    def table(self) -> t.Mapping[ProductKey, ConformalElement]:
        return self._table

    def _stored(self, g: str, k: int, h: str) -> ConformalElement:
        if (g, h) in self._pairs:
            return self._table.get((g, k, h), ConformalElement())
        if (h, g) in self._pairs:
            return self.qs(h, k, g)
        return ConformalElement()


def coeff_bracket(
    presentation: ConformalPresentation, a: CoeffElement, b: CoeffElement
) -> CoeffElement:
    """⟦g(m), h(n)⟧ = Σ_i C(m,i) (g∟i h)(m+n-i), extended bilinearly."""
    out = CoeffElement()
    for (g, m), ca in a.terms.items():
        for (h, n), cb in b.terms.items():
            for i in range(presentation.locality(g, h)):
                if not (c := gbinom(m, i)):
                    continue
                product = presentation.gproduct(g, i, h)
                if product:
                    out = out + CoeffElement.of(product, m + n - i) * (c * ca * cb)
    return out
