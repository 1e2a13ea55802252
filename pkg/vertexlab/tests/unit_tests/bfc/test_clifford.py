from fractions import Fraction

import pytest

from vertexlab.base.exceptions import StateError
from vertexlab.bfc.clifford import (
    VACUUM,
    CliffordFockState,
    CliffordMonomial,
    clifford_act,
    clifford_basis,
    clifford_basis_upto,
    ehat,
)
from vertexlab.foundation.partitions import partitions


def test_monomial_grading() -> None:
    mono = CliffordMonomial((-2,), (-3, -1))

    assert mono.charge == 1
    assert mono.degree == Fraction(9, 2)
    assert mono.depth == 3
    assert str(mono) == "g-1(-2) g1(-3) g1(-1)"
    assert str(VACUUM) == "1"


@pytest.mark.parametrize("mono", [CliffordMonomial((0,), ()), CliffordMonomial((), (-2, -1)), CliffordMonomial((-1, -1), ())])
def test_invalid_monomial(mono: CliffordMonomial) -> None:
    with pytest.raises(StateError):
        CliffordFockState({mono: 1})


def test_creation_anticommutes() -> None:
    """Verify odd creation modes pick up signs when reordered."""
    ordered = CliffordFockState.monomial(minus=(-2,), plus=(-1,))
    swapped = clifford_act(-1, -2, clifford_act(1, -1, CliffordFockState.vacuum()))
    reversed_order = clifford_act(1, -1, clifford_act(-1, -2, CliffordFockState.vacuum()))

    assert ordered == swapped
    assert reversed_order == ordered * -1
    assert not clifford_act(1, -1, CliffordFockState.monomial(plus=(-1,)))


def test_annihilation() -> None:
    one_particle = CliffordFockState.monomial(plus=(-1,))

    assert clifford_act(-1, 0, one_particle) == CliffordFockState.vacuum()
    assert not clifford_act(1, 0, one_particle)
    assert not clifford_act(1, 3, CliffordFockState.vacuum())


@pytest.mark.parametrize("m", range(-3, 3))
@pytest.mark.parametrize("n", range(-3, 3))
def test_clifford_relations(m: int, n: int) -> None:
    """Verify γ_1(m) γ_{-1}(n) + γ_{-1}(n) γ_1(m) = δ_{m+n,-1}."""
    for mono in clifford_basis_upto(3, charges=(-1, 0, 1)):
        w = CliffordFockState({mono: 1})
        anti = clifford_act(1, m, clifford_act(-1, n, w)) + clifford_act(-1, n, clifford_act(1, m, w))
        assert anti == w * int(m + n == -1), (m, n, mono)


def test_invalid_generator() -> None:
    with pytest.raises(ValueError):
        clifford_act(0, -1, CliffordFockState.vacuum())


def test_as_monomial() -> None:
    state = CliffordFockState.monomial(minus=(-1,), plus=(-1,)) * 3

    assert state.as_monomial() == CliffordMonomial((-1,), (-1,))
    assert state.coefficient(CliffordMonomial((-1,), (-1,))) == 3
    with pytest.raises(StateError):
        (state + CliffordFockState.vacuum()).as_monomial()


def test_ehat_on_vacuum() -> None:
    """Verify ê_ij creates a particle-hole pair only across the vacuum level."""
    vacuum = CliffordFockState.vacuum()

    assert ehat(-1, 0, vacuum) == CliffordFockState.monomial(minus=(-1,), plus=(-1,))
    assert not ehat(0, -1, vacuum)
    assert not ehat(0, 0, vacuum)
    assert not ehat(-1, -1, vacuum)


def test_ehat_diagonal() -> None:
    """Verify the normal ordered diagonal counts occupied and vacated levels."""
    state = CliffordFockState.monomial(minus=(-1,), plus=(-1,))

    assert ehat(-1, -1, state) == state
    assert ehat(0, 0, state) == state * -1
    assert not ehat(1, 1, state)


@pytest.mark.parametrize("m", range(7))
def test_charge_zero_basis_counts(m: int) -> None:
    """Verify the charge-zero space of degree m has dimension p(m)."""
    assert len(clifford_basis(0, m)) == len(partitions(m))


@pytest.mark.parametrize("charge", [-2, -1, 1, 2])
def test_charged_basis_counts(charge: int) -> None:
    lowest = Fraction(charge * charge, 2)

    for m in range(5):
        basis = clifford_basis(charge, lowest + m)
        assert len(basis) == len(partitions(m))
        assert all(mono.charge == charge for mono in basis)


def test_basis_upto() -> None:
    basis = clifford_basis_upto(2)

    assert {mono.charge for mono in basis} == {-2, -1, 0, 1, 2}
    assert all(mono.degree <= 2 for mono in basis)
    assert len(basis) == len(set(basis))
    assert len(clifford_basis(1, 1)) == 0
