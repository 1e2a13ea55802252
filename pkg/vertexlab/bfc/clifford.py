"""The Clifford Fock space V = 𝕜[γ_ε(n) | ε = ±1, n < 0] as a Grassmann algebra.

A monomial stores its γ_{-1} modes, then its γ_1 modes, each strictly
decreasing, and stands for γ_{-1}(a_1)...γ_{-1}(a_k) γ_1(b_1)...γ_1(b_l) 𝟙.
γ_ε(n) with n < 0 multiplies, with n ≥ 0 it is the odd derivation dual to
γ_{-ε}(-n-1), so that [γ_ε(m), γ_{-ε}(n)] = δ_{m+n,-1}.
"""

import itertools
import math
import typing as t
from fractions import Fraction

from vertexlab.base.exceptions import StateError
from vertexlab.foundation.scalars import Scalar, ScalarLike, as_scalar, sign


class CliffordMonomial(t.NamedTuple):
    minus: tuple[int, ...] = ()
    """Modes of γ_{-1}, strictly decreasing and negative."""
    plus: tuple[int, ...] = ()
    """Modes of γ_1, strictly decreasing and negative."""

    @property
    def charge(self) -> int:
        return len(self.plus) - len(self.minus)

    @property
    def degree(self) -> Fraction:
        return Fraction(-sum(self.minus) - sum(self.plus)) - Fraction(len(self.minus) + len(self.plus), 2)

    @property
    def depth(self) -> int:
        """Largest |n| among the modes."""
        return max((-n for n in (*self.minus, *self.plus)), default=0)

    def factors(self) -> list[tuple[int, int]]:
        """(ε, n) pairs in product order."""
        return [(-1, n) for n in self.minus] + [(1, n) for n in self.plus]

    def __str__(self) -> str:
        if not self.minus and not self.plus:
            return "1"
        return " ".join(f"g{eps}({n})" for eps, n in self.factors())


VACUUM: t.Final[CliffordMonomial] = CliffordMonomial()

CliffordTerms: t.TypeAlias = dict[CliffordMonomial, Fraction]


def _accumulate(target: CliffordTerms, mono: CliffordMonomial, c: Fraction) -> None:
    value = target.get(mono, Fraction(0)) + c
    if value:
        target[mono] = value
    else:
        target.pop(mono, None)


class CliffordFockState:
    """A finite exact combination of Clifford Fock monomials."""

    __slots__ = ("_terms",)

    def __init__(self, terms: t.Mapping[CliffordMonomial, ScalarLike] | None = None) -> None:
        self._terms: CliffordTerms = {}
        for mono, coeff in (terms or {}).items():
            _validate(mono)
            _accumulate(self._terms, mono, as_scalar(coeff))

    @classmethod
    def vacuum(cls) -> "CliffordFockState":
        return cls({VACUUM: 1})

    @classmethod
    def monomial(cls, minus: t.Sequence[int] = (), plus: t.Sequence[int] = ()) -> "CliffordFockState":
        """γ_{-1}(minus...) γ_1(plus...) 𝟙 with the modes in the given order."""
        state = cls.vacuum()
        for n in reversed(plus):
            state = clifford_act(1, n, state)
        for n in reversed(minus):
            state = clifford_act(-1, n, state)
        return state

    @property
    def terms(self) -> t.Mapping[CliffordMonomial, Fraction]:
        return self._terms

    def __add__(self, other: "CliffordFockState") -> "CliffordFockState":
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            _accumulate(terms, mono, c)
        return CliffordFockState(terms)

    def __sub__(self, other: "CliffordFockState") -> "CliffordFockState":
        return self + other * -1

    def __mul__(self, c: ScalarLike) -> "CliffordFockState":
        c = as_scalar(c)
        return CliffordFockState({m: v * c for m, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliffordFockState):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> t.Iterator[tuple[CliffordMonomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{m}" for m, c in sorted(self._terms.items()))

    def coefficient(self, mono: CliffordMonomial) -> Scalar:
        return self._terms.get(mono, Fraction(0))

    def as_monomial(self) -> CliffordMonomial:
        """The single monomial of a one-term state.

        Raises
        ------
        StateError
            If the state is not a multiple of a single monomial
        """
        if len(self._terms) != 1:
            raise StateError(f"Expected a single monomial, got {self!r}")
        return next(iter(self._terms))


def _validate(mono: CliffordMonomial) -> None:
    for modes in (mono.minus, mono.plus):
        if any(n >= 0 for n in modes) or any(a <= b for a, b in zip(modes, modes[1:])):
            raise StateError(f"Modes must be negative and strictly decreasing: {mono}")


def _insert(modes: tuple[int, ...], n: int) -> tuple[tuple[int, ...], int] | None:
    """Insert n into a strictly decreasing tuple; returns (tuple, elements passed) or None if present."""
    if n in modes:
        return None
    passed = sum(1 for x in modes if x > n)
    return modes[:passed] + (n,) + modes[passed:], passed


def act_monomial(eps: int, n: int, mono: CliffordMonomial) -> tuple[CliffordMonomial, int] | None:
    """γ_ε(n) applied to a monomial: the resulting monomial and sign, or None for zero."""
    if n < 0:
        if eps == -1:
            inserted = _insert(mono.minus, n)
            if inserted is None:
                return None
            modes, passed = inserted
            return CliffordMonomial(modes, mono.plus), sign(passed)
        inserted = _insert(mono.plus, n)
        if inserted is None:
            return None
        modes, passed = inserted
        return CliffordMonomial(mono.minus, modes), sign(len(mono.minus) + passed)

    target = -n - 1
    if eps == 1:
        if target not in mono.minus:
            return None
        r = mono.minus.index(target)
        return CliffordMonomial(mono.minus[:r] + mono.minus[r + 1 :], mono.plus), sign(r)
    if target not in mono.plus:
        return None
    r = mono.plus.index(target)
    return CliffordMonomial(mono.minus, mono.plus[:r] + mono.plus[r + 1 :]), sign(len(mono.minus) + r)


def clifford_act(eps: int, n: int, s: CliffordFockState) -> CliffordFockState:
    """The action of γ_ε(n), ε = ±1, on a state."""
    if eps not in (1, -1):
        raise ValueError(f"Clifford generators are indexed by ±1, got {eps}")
    out: CliffordTerms = {}
    for mono, c in s.terms.items():
        if (result := act_monomial(eps, n, mono)) is not None:
            target, sgn = result
            _accumulate(out, target, c * sgn)
    return CliffordFockState(out)


def ehat(i: int, j: int, s: CliffordFockState) -> CliffordFockState:
    """ê_ij = γ_{-1}(i) γ_1(-j-1), normal ordered as -γ_1(-j-1) γ_{-1}(i) when i = j ≥ 0."""
    if i == j >= 0:
        return clifford_act(1, -j - 1, clifford_act(-1, i, s)) * -1
    return clifford_act(-1, i, clifford_act(1, -j - 1, s))


def _strict_parts(total: int, count: int) -> t.Iterator[tuple[int, ...]]:
    """Strictly decreasing tuples of `count` positive integers summing to `total`."""
    for combo in itertools.combinations(range(total, 0, -1), count):
        if sum(combo) == total:
            yield combo


def clifford_basis(charge: int, degree: Fraction | int) -> list[CliffordMonomial]:
    """All monomials of the given charge and degree, sorted.

    With k modes of γ_{-1} and k + charge modes of γ_1 the mode energies
    add up to degree + (2k + charge)/2, which bounds k.
    """
    degree = Fraction(degree)
    out: list[CliffordMonomial] = []
    start = max(0, -charge)
    for k in range(start, start + 2 * max(math.ceil(degree), 0) + 2):
        ell = k + charge
        energy = degree + Fraction(k + ell, 2)
        if energy.denominator != 1:
            continue
        total = int(energy)
        for a in range(k * (k + 1) // 2, total - ell * (ell + 1) // 2 + 1):
            for minus in _strict_parts(a, k):
                for plus in _strict_parts(total - a, ell):
                    out.append(CliffordMonomial(tuple(-x for x in minus), tuple(-x for x in plus)))
    return sorted(out)


def clifford_basis_upto(max_degree: Fraction | int, charges: t.Iterable[int] | None = None) -> list[CliffordMonomial]:
    """All monomials of degree ≤ max_degree, optionally restricted to some charges."""
    max_degree = Fraction(max_degree)
    if charges is None:
        reach = 0
        while Fraction((reach + 1) ** 2, 2) <= max_degree:
            reach += 1
        charges = range(-reach, reach + 1)
    out = []
    for p in charges:
        d = Fraction(p * p, 2)
        while d <= max_degree:
            out.extend(clifford_basis(p, d))
            d += 1
    return out
