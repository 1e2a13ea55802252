import typing as t
from collections import defaultdict
from fractions import Fraction

from vertexlab.base.exceptions import LatticeMismatchError, StateError
from vertexlab.foundation.scalars import Scalar, ScalarLike, as_scalar
from vertexlab.lattice.context import LatticeContext, LatticePoint

Mode: t.TypeAlias = tuple[int, int]
"""A creation mode `(n, j)` standing for e_j(n), n < 0, j a 0-based basis index."""


class FockMonomial(t.NamedTuple):
    """e_{j1}(n1)...e_{jk}(nk) v_label with modes sorted ascending."""

    modes: tuple[Mode, ...]
    label: LatticePoint

    @property
    def depth(self) -> int:
        """Total energy of the creation modes, Σ(-n)."""
        return -sum(n for n, _ in self.modes)

    def without(self, position: int) -> "FockMonomial":
        return FockMonomial(self.modes[:position] + self.modes[position + 1 :], self.label)

    def with_mode(self, mode: Mode) -> "FockMonomial":
        return FockMonomial(tuple(sorted((*self.modes, mode))), self.label)


Terms: t.TypeAlias = dict[FockMonomial, Fraction]


def accumulate(target: Terms, source: t.Mapping[FockMonomial, Fraction], c: Fraction) -> None:
    """target += c * source, dropping cancelled monomials."""
    if not c:
        return
    for mono, coeff in source.items():
        value = target.get(mono, 0) + c * coeff
        if value:
            target[mono] = value
        else:
            target.pop(mono, None)


class FockState:
    """A finite exact linear combination of monomials of one lattice vertex algebra."""

    __slots__ = ("lattice", "_terms")

    def __init__(
        self,
        lattice: LatticeContext,
        terms: t.Mapping[FockMonomial, ScalarLike] | None = None,
    ) -> None:
        self.lattice = lattice
        self._terms: Terms = {}
        for mono, coeff in (terms or {}).items():
            lattice.check(mono.label)
            if value := as_scalar(coeff):
                self._terms[mono] = value

    @classmethod
    def zero(cls, lattice: LatticeContext) -> "FockState":
        return cls(lattice)

    @classmethod
    def vertex(cls, lattice: LatticeContext, beta: t.Sequence[int]) -> "FockState":
        """The highest weight vector v_beta."""
        return cls(lattice, {FockMonomial((), tuple(beta)): 1})

    @classmethod
    def vacuum(cls, lattice: LatticeContext) -> "FockState":
        return cls.vertex(lattice, lattice.zero())

    @classmethod
    def heisenberg(cls, lattice: LatticeContext, j: int, n: int = -1) -> "FockState":
        """The state e_j(n) v_0."""
        return normalize([(n, j)], lattice.zero(), lattice)

    @property
    def terms(self) -> t.Mapping[FockMonomial, Fraction]:
        return self._terms

    def _check_same(self, other: "FockState") -> None:
        if self.lattice != other.lattice:
            msg = f"States live in different lattices: {self.lattice} and {other.lattice}"
            raise LatticeMismatchError(msg)

    def __add__(self, other: "FockState") -> "FockState":
        self._check_same(other)
        terms = dict(self._terms)
        accumulate(terms, other._terms, Fraction(1))
        return FockState(self.lattice, terms)

    def __sub__(self, other: "FockState") -> "FockState":
        self._check_same(other)
        terms = dict(self._terms)
        accumulate(terms, other._terms, Fraction(-1))
        return FockState(self.lattice, terms)

    def __neg__(self) -> "FockState":
        return FockState(self.lattice, {m: -c for m, c in self._terms.items()})

    def __mul__(self, c: ScalarLike) -> "FockState":
        c = as_scalar(c)
        return FockState(self.lattice, {m: c * v for m, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockState):
            return NotImplemented
        return self.lattice == other.lattice and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.lattice, frozenset(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> t.Iterator[tuple[FockMonomial, Fraction]]:
        return iter(self._terms.items())

    def __repr__(self) -> str:
        from vertexlab.fock.grammar import format_state

        return f"FockState({format_state(self)!r})"

    def degree_of(self, mono: FockMonomial) -> Fraction:
        return self.lattice.norm(mono.label) / 2 + mono.depth

    def parity_of(self, mono: FockMonomial) -> int:
        return int(self.lattice.norm(mono.label)) % 2

    def _homogeneous(self, key: t.Callable[[FockMonomial], t.Any], what: str) -> t.Any:
        values = {key(m) for m in self._terms}
        if len(values) != 1:
            msg = f"State is not homogeneous in {what}: {sorted(map(str, values))}"
            raise StateError(msg)
        return values.pop()

    @property
    def label(self) -> LatticePoint:
        return self._homogeneous(lambda m: m.label, "lattice label")

    @property
    def degree(self) -> Fraction:
        return self._homogeneous(self.degree_of, "degree")

    @property
    def parity(self) -> int:
        return self._homogeneous(self.parity_of, "parity")

    def components(self) -> dict[tuple[LatticePoint, Fraction], "FockState"]:
        """Split into components homogeneous in label and degree."""
        parts: dict[tuple[LatticePoint, Fraction], Terms] = defaultdict(dict)
        for mono, coeff in self._terms.items():
            parts[(mono.label, self.degree_of(mono))][mono] = coeff
        return {key: FockState(self.lattice, terms) for key, terms in parts.items()}

    def coefficient(self, mono: FockMonomial) -> Scalar:
        return self._terms.get(mono, Fraction(0))


def normalize(
    raw_modes: t.Iterable[Mode],
    beta: t.Sequence[int],
    lattice: LatticeContext,
) -> FockState:
    """Canonical monomial for creation modes applied in any order to v_beta.

    Raises
    ------
    StateError
        If a mode index is nonnegative or a basis index is out of range
    """
    modes = tuple(raw_modes)
    for n, j in modes:
        if n >= 0:
            msg = f"Creation modes must have negative index, got {n}"
            raise StateError(msg)
        if not 0 <= j < lattice.rank:
            msg = f"Basis index {j + 1} out of range for rank {lattice.rank}"
            raise StateError(msg)
    lattice.check(beta)
    return FockState(lattice, {FockMonomial(tuple(sorted(modes)), tuple(beta)): 1})
