from fractions import Fraction

import pytest

from vertexlab.base.exceptions import LatticeMismatchError, StateError
from vertexlab.fock.state import FockMonomial, FockState, normalize
from vertexlab.lattice.context import LatticeContext


def test_normalize_sorts_modes(a2: LatticeContext) -> None:
    """Verify creation modes commute and are stored in ascending order."""
    state = normalize([(-1, 1), (-2, 1)], (0, 0), a2)

    ((mono, coeff),) = list(state)
    assert mono.modes == ((-2, 1), (-1, 1))
    assert coeff == 1


def test_normalize_keeps_repeated_modes(a2: LatticeContext) -> None:
    state = normalize([(-1, 0), (-1, 0)], (0, 0), a2)

    ((mono, _),) = list(state)
    assert mono.modes == ((-1, 0), (-1, 0))
    assert mono.depth == 2


def test_normalize_no_modes(a2: LatticeContext) -> None:
    assert normalize([], (1, -1), a2) == FockState.vertex(a2, (1, -1))


@pytest.mark.parametrize(
    ("modes", "label"),
    [([(0, 0)], (0, 0)), ([(-1, 2)], (0, 0)), ([(-1, -1)], (0, 0))],
)
def test_normalize_invalid(a2: LatticeContext, modes: list[tuple[int, int]], label: tuple[int, ...]) -> None:
    """Verify annihilation modes and out-of-range basis indices are rejected."""
    with pytest.raises(StateError):
        normalize(modes, label, a2)


def test_normalize_wrong_rank(a2: LatticeContext) -> None:
    with pytest.raises(LatticeMismatchError):
        normalize([], (1,), a2)


def test_arithmetic(a2: LatticeContext) -> None:
    u = FockState.vertex(a2, (1, 0))
    v = FockState.heisenberg(a2, 0)

    total = u * 2 + v - u

    assert total.coefficient(FockMonomial((), (1, 0))) == 1
    assert total.coefficient(FockMonomial(((-1, 0),), (0, 0))) == 1
    assert len(total) == 2
    assert not (u - u)
    assert -u == u * -1
    assert Fraction(1, 2) * u == u * Fraction(1, 2)


def test_mixed_lattices(a1: LatticeContext, z1: LatticeContext) -> None:
    with pytest.raises(LatticeMismatchError):
        FockState.vacuum(a1) + FockState.vacuum(z1)


def test_grading(a2: LatticeContext) -> None:
    """Verify degree ½(β|β) + depth and parity of the label norm."""
    state = normalize([(-2, 0)], (1, 1), a2)

    assert state.label == (1, 1)
    assert state.degree == 3
    assert state.parity == 0


def test_odd_parity(z1: LatticeContext) -> None:
    state = FockState.vertex(z1, (1,))

    assert state.parity == 1
    assert state.degree == Fraction(1, 2)


def test_inhomogeneous(a2: LatticeContext) -> None:
    """Verify grading queries reject mixed states but components split them."""
    state = FockState.vertex(a2, (1, 0)) + FockState.heisenberg(a2, 1, -3)

    with pytest.raises(StateError):
        _ = state.degree
    with pytest.raises(StateError):
        _ = state.label

    parts = state.components()
    assert set(parts) == {((1, 0), Fraction(1)), ((0, 0), Fraction(3))}
    assert sum(parts.values(), FockState.zero(a2)) == state


def test_zero_coefficients_dropped(a2: LatticeContext) -> None:
    state = FockState(a2, {FockMonomial((), (0, 0)): 0})

    assert not state
    assert state == FockState.zero(a2)
