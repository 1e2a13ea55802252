"""Mode actions and n-th products in a lattice vertex superalgebra.

Products are computed on monomials. A monomial without creation modes is a
vertex state v_β and acts through its vertex operator. Otherwise the first
mode e_j(p) is peeled off, u = ẽ_j ∟p b with ẽ_j = e_j(-1)v_0, and the
associativity formula

    (a∟p b)∟m c = Σ_{i≥0} (-1)^i C(p,i) [a∟(p-i)(b∟(m+i)c) - (-1)^p b∟(p+m-i)(a∟i c)]

reduces the product to the Heisenberg action a∟s = e_j(s) and products of
the shorter monomial b. Both sums are finite: b∟k c vanishes once k exceeds
`_bound(b, c)` and e_j(i) for i > 0 kills c once i exceeds the depth of c.
"""

import functools
import math
import threading
import typing as t
from collections import Counter
from fractions import Fraction

from vertexlab.base.env import ENV_VERTEXLAB_MEMO, FLAG_OFF, get_env_item
from vertexlab.base.exceptions import LatticeError, LatticeMismatchError
from vertexlab.base.log import LoggingMixin
from vertexlab.fock.state import FockMonomial, FockState, Terms, accumulate
from vertexlab.foundation.partitions import partitions
from vertexlab.foundation.scalars import gbinom, sign
from vertexlab.lattice.context import LatticeContext, Vector, add

ProductKey: t.TypeAlias = tuple[FockMonomial, int, FockMonomial]

MEMO_LIMIT: t.Final[int] = 200_000
"""Memoized monomial products kept per lattice before the memo is dropped."""

ALGEBRA_CACHE_SIZE: t.Final[int] = 8
"""Lattices whose engines are kept alive at once."""


class VertexAlgebra(LoggingMixin):
    """Product engine for the lattice vertex superalgebra of one lattice."""

    def __init__(self, lattice: LatticeContext) -> None:
        self.lattice = lattice
        self._memo: dict[ProductKey, Terms] = {}
        self._lock = threading.Lock()
        self._use_memo = get_env_item(ENV_VERTEXLAB_MEMO).value != FLAG_OFF

    def bound(self, left: FockMonomial, right: FockMonomial) -> int:
        """Largest n for which left∟n right can be nonzero."""
        return left.depth + right.depth - int(self.lattice.inner(left.label, right.label)) - 1

    def heis(self, h: Vector, n: int, terms: t.Mapping[FockMonomial, Fraction]) -> Terms:
        """Apply the Heisenberg mode h(n) to a combination of monomials."""
        out: Terms = {}
        rank = self.lattice.rank
        if n < 0:
            for mono, coeff in terms.items():
                for j in range(rank):
                    if h[j]:
                        accumulate(out, {mono.with_mode((n, j)): coeff}, Fraction(h[j]))
        elif n == 0:
            for mono, coeff in terms.items():
                accumulate(out, {mono: coeff}, self.lattice.inner(h, mono.label))
        else:
            pairing = [self.lattice.pairing(h, j) for j in range(rank)]
            for mono, coeff in terms.items():
                for position, (k, j) in enumerate(mono.modes):
                    if k == -n and pairing[j]:
                        accumulate(out, {mono.without(position): coeff}, n * pairing[j])
        return out

    def _schur(
        self,
        alpha: Vector,
        order: int,
        terms: t.Mapping[FockMonomial, Fraction],
        annihilating: bool,
    ) -> Terms:
        """Coefficient of z^{∓order} in exp(∓Σ_j α(±j) z^{∓j}/j) applied to `terms`.

        With `annihilating` the exponent uses α(j), j > 0, with a minus sign;
        otherwise it uses the creation modes α(-j).
        """
        out: Terms = {}
        for kappa in partitions(order):
            mult = Counter(kappa.parts)
            coeff = Fraction(1)
            current: t.Mapping[FockMonomial, Fraction] = terms
            for j, k in mult.items():
                step = Fraction(-1 if annihilating else 1, j)
                coeff *= step**k / math.factorial(k)
                for _ in range(k):
                    current = self.heis(alpha, j if annihilating else -j, current)
                    if not current:
                        break
            if current:
                accumulate(out, current, coeff)
        return out

    def vertex(self, alpha: t.Sequence[int], n: int, terms: t.Mapping[FockMonomial, Fraction]) -> Terms:
        """Coefficient of z^{-n-1} in Γ_α(z) = e(α) z^{α(0)} E₋(α,z) E₊(α,z)."""
        out: Terms = {}
        for mono, coeff in terms.items():
            mu = mono.label
            shift = int(self.lattice.inner(alpha, mu))
            target = add(alpha, mu)
            epsilon = self.lattice.epsilon(tuple(alpha), mu)
            for a in range(mono.depth + 1):
                b = a - shift - n - 1
                if b < 0:
                    continue
                lowered = self._schur(alpha, a, {mono: coeff}, annihilating=True)
                if not lowered:
                    continue
                raised = self._schur(alpha, b, lowered, annihilating=False)
                relabelled = {FockMonomial(m.modes, target): c for m, c in raised.items()}
                accumulate(out, relabelled, Fraction(epsilon))
        return out

    def monomial_product(self, left: FockMonomial, n: int, right: FockMonomial) -> Terms:
        """left∟n right for monomials with unit coefficients. Do not mutate the result."""
        if n > self.bound(left, right):
            return {}

        key = (left, n, right)
        if self._use_memo:
            with self._lock:
                cached = self._memo.get(key)
            if cached is not None:
                return cached

        if not left.modes:
            result = self.vertex(left.label, n, {right: Fraction(1)})
        else:
            result = self._peel(left, n, right)

        if self._use_memo:
            with self._lock:
                if len(self._memo) >= MEMO_LIMIT:
                    self.log.debug(f"Product memo reached {MEMO_LIMIT} entries, dropping it")
                    self._memo.clear()
                self._memo[key] = result
        return result

    def _peel(self, left: FockMonomial, n: int, right: FockMonomial) -> Terms:
        (p, j), rest = left.modes[0], FockMonomial(left.modes[1:], left.label)
        e_j = self.lattice.basis(j)
        out: Terms = {}

        for i in range(self.bound(rest, right) - n + 1):
            coeff = sign(i) * gbinom(p, i)
            if coeff:
                inner = self.monomial_product(rest, n + i, right)
                if inner:
                    accumulate(out, self.heis(e_j, p - i, inner), coeff)

        for i in range(right.depth + 1):
            coeff = -sign(p) * sign(i) * gbinom(p, i)
            if not coeff:
                continue
            acted = self.heis(e_j, i, {right: Fraction(1)})
            for mono, c in acted.items():
                accumulate(out, self.monomial_product(rest, p + n - i, mono), coeff * c)

        return out

    def product(
        self,
        left: t.Mapping[FockMonomial, Fraction],
        n: int,
        right: t.Mapping[FockMonomial, Fraction],
    ) -> Terms:
        out: Terms = {}
        for lm, lc in left.items():
            for rm, rc in right.items():
                accumulate(out, self.monomial_product(lm, n, rm), lc * rc)
        return out

    def derive(self, terms: t.Mapping[FockMonomial, Fraction]) -> Terms:
        out: Terms = {}
        for mono, coeff in terms.items():
            for position, (k, j) in enumerate(mono.modes):
                raised = mono.without(position).with_mode((k - 1, j))
                accumulate(out, {raised: coeff}, Fraction(-k))
            accumulate(out, self.heis(mono.label, -1, {mono: coeff}), Fraction(1))
        return out

    def clear(self) -> None:
        with self._lock:
            self._memo.clear()


@functools.lru_cache(maxsize=ALGEBRA_CACHE_SIZE)
def algebra(lattice: LatticeContext) -> VertexAlgebra:
    """The shared engine of a lattice."""
    return VertexAlgebra(lattice)


def clear_products() -> None:
    """Drop every cached engine together with its product memo."""
    algebra.cache_clear()


def _same_lattice(*states: FockState) -> LatticeContext:
    lattice = states[0].lattice
    for state in states[1:]:
        if state.lattice != lattice:
            msg = f"States live in different lattices: {lattice} and {state.lattice}"
            raise LatticeMismatchError(msg)
    return lattice


def heis_act(h: Vector, n: int, s: FockState) -> FockState:
    """Action of the Heisenberg mode h(n), h given in basis coordinates."""
    s.lattice.check(h)
    return FockState(s.lattice, algebra(s.lattice).heis(h, n, s.terms))


def vertex_act(alpha: t.Sequence[int], n: int, w: FockState) -> FockState:
    """Coefficient of z^{-n-1} in the vertex operator of v_alpha applied to w."""
    w.lattice.check(alpha)
    return FockState(w.lattice, algebra(w.lattice).vertex(tuple(alpha), n, w.terms))


def product(u: FockState, n: int, v: FockState) -> FockState:
    """The n-th product u∟n v for any integer n."""
    lattice = _same_lattice(u, v)
    return FockState(lattice, algebra(lattice).product(u.terms, n, v.terms))


def derive(u: FockState) -> FockState:
    """The translation operator D."""
    return FockState(u.lattice, algebra(u.lattice).derive(u.terms))


def derive_power(u: FockState, k: int) -> FockState:
    """D^k u."""
    for _ in range(k):
        u = derive(u)
    return u


def product_bound(u: FockState, v: FockState) -> int | None:
    """Largest n with u∟n v possibly nonzero, or None if either state is zero."""
    engine = algebra(_same_lattice(u, v))
    bounds = [engine.bound(a, b) for a in u.terms for b in v.terms]
    return max(bounds) if bounds else None


def omega(lattice: LatticeContext) -> FockState:
    """The conformal vector ½ Σ (G⁻¹)_ij e_i(-1) e_j(-1) v_0.

    Raises
    ------
    LatticeError
        If the form is degenerate
    """
    if lattice.is_degenerate:
        raise LatticeError("The conformal vector requires a non-degenerate form")
    dual = lattice.dual_basis()
    terms: Terms = {}
    vacuum = FockMonomial((), lattice.zero())
    for i in range(lattice.rank):
        for j in range(lattice.rank):
            if coeff := dual[i][j]:
                mono = FockMonomial(tuple(sorted([(-1, i), (-1, j)])), vacuum.label)
                accumulate(terms, {mono: Fraction(1)}, coeff / 2)
    return FockState(lattice, terms)
