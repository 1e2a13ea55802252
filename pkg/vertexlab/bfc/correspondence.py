"""The identification of the Clifford Fock space with V_ℤ and the matrix action on it.

γ_ε ↦ v_ε and 𝟙 ↦ v_0 extend to an isomorphism of modules by sending
γ_ε(n)w to v_ε∟n Φ(w). Banded matrices act through
A ↦ Σ_d Σ_i q_d(i) ê_{i,i+d} + central·Id.
"""

import functools
import itertools
import typing as t
from fractions import Fraction

from vertexlab.base.log import get_logger
from vertexlab.base.models import Report
from vertexlab.base.utils import parallel_map
from vertexlab.bfc.banded import BandedMatrix, phi_elementary, weyl_to_matrix
from vertexlab.bfc.clifford import (
    CliffordFockState,
    CliffordMonomial,
    clifford_basis_upto,
    ehat,
)
from vertexlab.fock.engine import product
from vertexlab.fock.grammar import format_state
from vertexlab.fock.state import FockState
from vertexlab.lattice.context import LatticeContext

log = get_logger(__name__)

BOSON_LATTICE: t.Final[LatticeContext] = LatticeContext([[1]])
"""The rank-one lattice of norm 1 carrying the bosonic side."""


@functools.cache
def _boson_monomial(mono: CliffordMonomial) -> FockState:
    state = FockState.vacuum(BOSON_LATTICE)
    for eps, n in reversed(mono.factors()):
        state = product(FockState.vertex(BOSON_LATTICE, (eps,)), n, state)
    return state


def boson_fermion(s: CliffordFockState) -> FockState:
    """Image of a Clifford Fock state in V_ℤ."""
    total = FockState.zero(BOSON_LATTICE)
    for mono, c in s:
        total = total + _boson_monomial(mono) * c
    return total


def _window(mono: CliffordMonomial, d: int) -> range:
    """Rows i for which ê_{i,i+d} can act nontrivially on `mono`."""
    reach = mono.depth + abs(d) + 1
    return range(-reach, reach + 1)


def matrix_act(a: BandedMatrix, s: CliffordFockState) -> CliffordFockState:
    """Action of a banded matrix on the Clifford Fock space through ê_ij."""
    out = s * a.central
    for mono, c in s:
        single = CliffordFockState({mono: c})
        for d, q in a.diagonals.items():
            for i in _window(mono, d):
                if coeff := q(i):
                    acted = ehat(i, i + d, single)
                    if acted:
                        out = out + acted * coeff
    return out


def bf_check(m: int, n: int, degree_cap: int) -> bool:
    """Compare the vertex-algebra operator (v_{-1}∟(-m-1) v_1)(n) with the matrix of p_m(n).

    Every Clifford basis monomial of degree ≤ `degree_cap` is transported to
    V_ℤ; both sides must agree exactly.
    """
    return bf_report(m, n, degree_cap).passed


def bf_report(m: int, n: int, degree_cap: int) -> Report:
    if m < 0:
        raise ValueError(f"p_m(n) needs m >= 0, got {m}")
    p_m = product(
        FockState.vertex(BOSON_LATTICE, (-1,)), -m - 1, FockState.vertex(BOSON_LATTICE, (1,))
    )
    matrix = weyl_to_matrix(m, n)
    report = Report(name=f"bfc:p{m}({n})")

    def compare(mono: CliffordMonomial) -> tuple[bool, str]:
        w = CliffordFockState({mono: 1})
        lhs = product(p_m, n, boson_fermion(w))
        rhs = boson_fermion(matrix_act(matrix, w))
        return lhs == rhs, f"p{m}({n}) on {mono}: {format_state(lhs)} != {format_state(rhs)}"

    for ok, detail in parallel_map(compare, clifford_basis_upto(degree_cap)):
        report.record("boson-fermion", ok, lambda detail=detail: detail)
    return report


def check_ehat_brackets(degree_cap: int, window: int = 2, charges: t.Iterable[int] = (0,)) -> Report:
    """[ê_ij, ê_kq] = δ_jk ê_iq - δ_iq ê_kj + φ(E_ij, E_kq) on basis states of bounded degree."""
    basis = clifford_basis_upto(degree_cap, charges)
    indices = range(-window, window + 1)
    report = Report(name="ehat-brackets")

    def check(quad: tuple[int, int, int, int]) -> list[tuple[bool, str]]:
        i, j, k, q = quad
        out = []
        for mono in basis:
            w = CliffordFockState({mono: 1})
            lhs = ehat(i, j, ehat(k, q, w)) - ehat(k, q, ehat(i, j, w))
            rhs = w * phi_elementary(i, j, k, q)
            if j == k:
                rhs = rhs + ehat(i, q, w)
            if i == q:
                rhs = rhs - ehat(k, j, w)
            out.append((lhs == rhs, f"[e({i},{j}), e({k},{q})] on {mono}: {lhs!r} != {rhs!r}"))
        return out

    for outcomes in parallel_map(check, list(itertools.product(indices, repeat=4))):
        for ok, detail in outcomes:
            report.record("ehat-bracket", ok, lambda detail=detail: detail)
    return report


def check_contravariance(degree_cap: int, charge: int = 0) -> Report:
    """(ê_ij u | v) = (u | ê_ji v) and norm preservation for the monomial-orthonormal form."""
    basis = clifford_basis_upto(degree_cap, (charge,))
    reach = int(degree_cap) + 1
    report = Report(name="contravariance")
    for i, j in itertools.product(range(-reach, reach + 1), repeat=2):
        images = {mono: ehat(i, j, CliffordFockState({mono: 1})) for mono in basis}
        adjoints = {mono: ehat(j, i, CliffordFockState({mono: 1})) for mono in basis}
        for u, v in itertools.product(basis, repeat=2):
            left = images[u].coefficient(v)
            right = adjoints[v].coefficient(u)
            report.record(
                "contravariant",
                left == right,
                lambda i=i, j=j, u=u, v=v, left=left, right=right: (
                    f"e({i},{j}): ({u} -> {v}) {left} != {right}"
                ),
            )
        for u, image in images.items():
            if image:
                norm = sum((c * c for _, c in image), Fraction(0))
                report.record("norm", norm == 1, lambda i=i, j=j, u=u, norm=norm: f"|e({i},{j}) {u}|^2 = {norm}")
    return report
