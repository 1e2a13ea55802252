"""Weights of the diagonal ê_ii on the Clifford Fock space.

A monomial is a weight vector: γ_{-1}(i) contributes λ_i (i < 0) and γ_1(n)
contributes -λ_{-n-1}. On charge 0 every weight has the form
λ_c + Σ_j (λ_{-ξ_j} - λ_{η_j}) for the Frobenius coordinates ⟨ξ|η⟩ of a
partition of the degree; charge i > 0 uses coordinates of bias i, and
negative charges follow by exchanging γ_1 and γ_{-1}.
"""

import typing as t
from dataclasses import dataclass
from fractions import Fraction

from vertexlab.base.exceptions import StateError
from vertexlab.base.log import get_logger
from vertexlab.bfc.banded import weyl_to_matrix
from vertexlab.bfc.clifford import CliffordFockState, CliffordMonomial, clifford_basis
from vertexlab.bfc.correspondence import matrix_act
from vertexlab.foundation.partitions import biased_frobenius, partitions

log = get_logger(__name__)


@dataclass(frozen=True, order=True)
class Weight:
    """λ_c·central + Σ coeff·λ_index, stored as sorted (index, coeff) pairs."""

    coeffs: tuple[tuple[int, int], ...] = ()
    central: int = 1

    @classmethod
    def from_mapping(cls, coeffs: t.Mapping[int, int], central: int = 1) -> "Weight":
        return cls(tuple(sorted((i, c) for i, c in coeffs.items() if c)), central)

    def as_dict(self) -> dict[str, int]:
        """JSON-friendly {index: coeff} map with the central coefficient under "c"."""
        return {"c": self.central, **{str(i): c for i, c in self.coeffs}}

    @property
    def length(self) -> int:
        """Number of positive coefficients on negative indices."""
        return sum(1 for i, c in self.coeffs if i < 0 and c > 0)

    def conjugate(self) -> "Weight":
        """Image under γ_1 ↔ γ_{-1}: λ_k ↦ -λ_{-k-1}."""
        return Weight.from_mapping({-i - 1: -c for i, c in self.coeffs}, self.central)

    def __str__(self) -> str:
        pieces = ["λc"] if self.central == 1 else [f"{self.central}λc"]
        for i, c in self.coeffs:
            sgn = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            pieces.append(f"{sgn} {mag}λ{i}")
        return " ".join(pieces)


def monomial_weight(mono: CliffordMonomial) -> Weight:
    coeffs = {i: 1 for i in mono.minus}
    coeffs.update({-n - 1: -1 for n in mono.plus})
    return Weight.from_mapping(coeffs)


def weight(s: CliffordFockState | CliffordMonomial) -> Weight:
    """Weight of a basis monomial.

    Raises
    ------
    StateError
        If `s` is not a multiple of a single monomial
    """
    mono = s if isinstance(s, CliffordMonomial) else s.as_monomial()
    return monomial_weight(mono)


def length(w: Weight) -> int:
    return w.length


def _frobenius_weight(xi: t.Sequence[int], eta: t.Sequence[int]) -> Weight:
    coeffs = {-x: 1 for x in xi}
    coeffs.update({y: -1 for y in eta})
    return Weight.from_mapping(coeffs)


def weights_of_degree(charge: int, m: int) -> list[Weight]:
    """Predicted weights μ_i(κ), κ a partition of m, of charge-i states of degree m + i²/2.

    Raises
    ------
    ValueError
        If `m` is negative
    """
    if charge < 0:
        return sorted(w.conjugate() for w in weights_of_degree(-charge, m))
    out = []
    for kappa in partitions(m):
        coords = biased_frobenius(kappa, charge)
        out.append(_frobenius_weight(coords.xi, coords.eta))
    return sorted(out)


def enumerated_weights(charge: int, m: int) -> list[Weight]:
    """Weights of all basis monomials of charge i and degree m + i²/2."""
    basis = clifford_basis(charge, Fraction(charge * charge, 2) + m)
    return sorted(monomial_weight(mono) for mono in basis)


def lowest_weight(charge: int) -> Weight:
    """Weight of the lowest vector of charge i, γ_1(-1)...γ_1(-i)𝟙 for i > 0."""
    return weights_of_degree(charge, 0)[0]


def _reduce(
    basis: dict[CliffordMonomial, CliffordFockState], v: CliffordFockState
) -> CliffordFockState:
    """Eliminate the pivots of an echelon basis from v."""
    for pivot, row in basis.items():
        if c := v.coefficient(pivot):
            v = v - row * c
    return v


def wplus_span(v: CliffordFockState, degree_cap: int) -> set[Weight]:
    """Weights of the subspace generated from v by p_m(n), m, n ≥ 0, within degree ≤ cap.

    Generators are limited to m ≤ cap; a homogeneous v of degree d only meets
    p_m(n) with 0 ≤ d + m - n ≤ cap.
    """
    degrees = {mono.degree for mono, _ in v}
    if len(degrees) != 1:
        raise StateError(f"wplus_span expects a degree-homogeneous state, got {v!r}")
    operators = [(m, n) for m in range(degree_cap + 1) for n in range(m + degree_cap + 1)]
    matrices = {key: weyl_to_matrix(*key) for key in operators}

    basis: dict[CliffordMonomial, CliffordFockState] = {}
    pending = [(v, degrees.pop())]
    while pending:
        vector, degree = pending.pop()
        vector = _reduce(basis, vector)
        if not vector:
            continue
        pivot = max(mono for mono, _ in vector)
        vector = vector * (1 / vector.coefficient(pivot))
        for key in list(basis):
            if c := basis[key].coefficient(pivot):
                basis[key] = basis[key] - vector * c
        basis[pivot] = vector
        for m, n in operators:
            target = degree + m - n
            if 0 <= target <= degree_cap:
                image = matrix_act(matrices[(m, n)], vector)
                if image:
                    pending.append((image, target))
    log.debug("W+ span of dimension %d", len(basis))
    return {monomial_weight(mono) for row in basis.values() for mono, _ in row}
