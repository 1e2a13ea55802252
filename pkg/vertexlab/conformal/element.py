import math
import typing as t
from fractions import Fraction

from vertexlab.foundation.scalars import ScalarLike, as_scalar, gbinom, sign

CENTRAL: t.Final[str] = "c"
"""Generator id of the central element; D kills it."""

ElementKey: t.TypeAlias = tuple[str, int]
"""(generator id, power of D)."""

CoeffKey: t.TypeAlias = tuple[str, int]
"""(generator id, mode index)."""


class _Combination:
    """Shared arithmetic of finite exact linear combinations keyed by pairs."""

    __slots__ = ("_terms",)

    def __init__(self, terms: t.Mapping[tuple[str, int], ScalarLike] | None = None) -> None:
        self._terms: dict[tuple[str, int], Fraction] = {}
        for key, coeff in (terms or {}).items():
            if self._admits(key) and (value := as_scalar(coeff)):
                self._terms[key] = self._terms.get(key, Fraction(0)) + value
                if not self._terms[key]:
                    del self._terms[key]

    def _admits(self, key: tuple[str, int]) -> bool:
        return True

    def _combine(self, other: t.Self, c: Fraction) -> dict[tuple[str, int], Fraction]:
        terms = dict(self._terms)
        for key, value in other._terms.items():
            total = terms.get(key, Fraction(0)) + c * value
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
        return terms

    @property
    def terms(self) -> t.Mapping[tuple[str, int], Fraction]:
        return self._terms

    def __add__(self, other: t.Self) -> t.Self:
        return type(self)(self._combine(other, Fraction(1)))

    def __sub__(self, other: t.Self) -> t.Self:
        return type(self)(self._combine(other, Fraction(-1)))

    def __neg__(self) -> t.Self:
        return type(self)({k: -v for k, v in self._terms.items()})

    def __mul__(self, c: ScalarLike) -> t.Self:
        c = as_scalar(c)
        return type(self)({k: c * v for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> t.Iterator[tuple[tuple[str, int], Fraction]]:
        return iter(sorted(self._terms.items()))


class ConformalElement(_Combination):
    """Σ c·D^k g over generators g of one presentation."""

    __slots__ = ()

    def _admits(self, key: ElementKey) -> bool:
        gid, k = key
        return k >= 0 and not (gid == CENTRAL and k > 0)

    @classmethod
    def generator(cls, gid: str, coeff: ScalarLike = 1) -> "ConformalElement":
        return cls({(gid, 0): coeff})

    @classmethod
    def central(cls, coeff: ScalarLike = 1) -> "ConformalElement":
        return cls({(CENTRAL, 0): coeff})

    def derive(self, times: int = 1) -> "ConformalElement":
        return ConformalElement({(g, k + times): c for (g, k), c in self._terms.items()})

    def divided(self, s: int) -> "ConformalElement":
        """D^(s) x = (-1)^s D^s x / s!."""
        return self.derive(s) * Fraction(sign(s), math.factorial(s))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (gid, k), c in self:
            d = "" if k == 0 else ("D " if k == 1 else f"D^{k} ")
            pieces.append(f"{c}*{d}{gid}")
        return " + ".join(pieces)


class CoeffElement(_Combination):
    """Σ c·g(n), a combination of coefficients in the coefficient algebra.

    The central element only survives as c(-1), identified with the central
    scalar.
    """

    __slots__ = ()

    def _admits(self, key: CoeffKey) -> bool:
        gid, n = key
        return gid != CENTRAL or n == -1

    @classmethod
    def mode(cls, gid: str, n: int, coeff: ScalarLike = 1) -> "CoeffElement":
        return cls({(gid, n): coeff})

    @classmethod
    def of(cls, x: ConformalElement, n: int) -> "CoeffElement":
        """The n-th coefficient of x, using (D^s a)(n) = (-1)^s s! C(n,s) a(n-s)."""
        terms: dict[CoeffKey, Fraction] = {}
        for (gid, s), c in x.terms.items():
            key = (gid, n - s)
            scale = sign(s) * math.factorial(s) * gbinom(n, s)
            terms[key] = terms.get(key, Fraction(0)) + c * scale
        return cls(terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{g}({n})" for (g, n), c in self)
