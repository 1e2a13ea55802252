from fractions import Fraction

import pytest

from vertexlab.base.exceptions import RootSystemError
from vertexlab.fock.engine import product
from vertexlab.fock.grammar import parse_state
from vertexlab.fock.state import FockState
from vertexlab.lattice.context import LatticeContext
from vertexlab.roots.support import fock_dimension, support_closure

A2 = LatticeContext([[2, -1], [-1, 2]])


@pytest.mark.parametrize(
    ("norm", "zero_rank"),
    [(1, 0), (2, 1)],
)
def test_support_rank1(norm: int, zero_rank: int) -> None:
    """Verify v_{±α} generate only ±α and a zero component of the expected rank."""
    lattice = LatticeContext([[norm]])

    result = support_closure([(1,)], lattice, 2)

    assert result.roots == {(1,), (-1,)}
    assert result.rank((0,)) == zero_rank
    assert result.dimension((1,), Fraction(norm, 2)) == 1


def test_support_a2() -> None:
    """Verify the simple roots of A2 generate the affine currents."""
    result = support_closure([(1, 0), (0, 1)], A2, 2)

    assert result.roots == {(1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)}
    assert result.rank((0, 0)) == 2
    assert result.dimension((0, 0), 0) == 1
    assert result.dimension((0, 0), 1) == 2
    assert result.rank((1, 1)) == 1


@pytest.mark.slow
def test_support_a2_deep() -> None:
    result = support_closure([(1, 0), (0, 1)], A2, 6)

    assert result.rank((0, 0)) == 2
    assert len(result.roots) == 6


def test_norm5_double_root_witness() -> None:
    """Verify α(-3)v_α ∟0 α(-1)³v_α is a nonzero multiple of v_{2α}."""
    lattice = LatticeContext([[5]])
    left = parse_state("b1(-3) e[1]", lattice)
    right = parse_state("b1(-1) b1(-1) b1(-1) e[1]", lattice)

    assert product(left, 0, right) == FockState.vertex(lattice, (2,)) * 500


@pytest.mark.parametrize(
    ("rank", "depth", "expected"),
    [(1, 0, 1), (1, 3, 3), (1, 6, 11), (1, 10, 42), (2, 2, 5), (3, 1, 3), (1, -1, 0)],
)
def test_fock_dimension(rank: int, depth: int, expected: int) -> None:
    assert fock_dimension(rank, depth) == expected


@pytest.mark.slow
def test_support_norm5_fills_components() -> None:
    """Verify the components of V_α and V_0 are exhausted below degree 6."""
    result = support_closure([(1,)], LatticeContext([[5]]), 6)

    assert result.dimension((1,), Fraction(11, 2)) == 3
    assert result.dimension((0,), 6) == 11


@pytest.mark.slow
def test_support_norm5_double_root() -> None:
    result = support_closure([(1,)], LatticeContext([[5]]), 10)

    assert (2,) in result.roots
    assert (-2,) in result.roots
    assert result.dimension((2,), 10) == 1


@pytest.mark.slow
def test_support_norm5_zero_rank() -> None:
    """Verify a root of norm 5 already gives a zero component of rank two below degree 4."""
    result = support_closure([(1,)], LatticeContext([[5]]), 4)

    assert result.roots == {(1,), (-1,)}
    assert result.rank((0,)) >= 2


def test_support_invalid() -> None:
    with pytest.raises(RootSystemError):
        support_closure([], A2, 2)
    with pytest.raises(RootSystemError):
        support_closure([(0, 0)], A2, 2)
    with pytest.raises(RootSystemError, match="below"):
        support_closure([(1,)], LatticeContext([[4]]), 1)


@pytest.mark.slow
@pytest.mark.parametrize("norm", [1, 2, 3, 4])
def test_support_rank1_small_norms(norm: int) -> None:
    """Verify norms up to four never leave the labels ±α below degree 8."""
    result = support_closure([(1,)], LatticeContext([[norm]]), 8)

    assert result.roots == {(1,), (-1,)}


@pytest.mark.slow
@pytest.mark.parametrize(
    ("gram", "gens", "expected"),
    [
        (
            [[1, 0], [0, 1]],
            [(1, 0), (0, 1), (1, 1), (1, -1)],
            {(1, 0), (0, 1), (1, 1), (1, -1)},
        ),
        (
            [[4, -2], [-2, 2]],
            [(1, 0), (0, 1)],
            {(1, 0), (0, 1), (1, 1), (1, 2)},
        ),
        ([[1]], [(1,), (2,)], {(1,), (2,)}),
    ],
    ids=["B2", "C2", "BC1"],
)
def test_support_matches_root_system(
    gram: list[list[int]],
    gens: list[tuple[int, ...]],
    expected: set[tuple[int, ...]],
) -> None:
    """Verify the generated subalgebra is supported on exactly the listed roots and their negatives."""
    result = support_closure(gens, LatticeContext(gram), 6)

    assert result.roots == expected | {tuple(-x for x in root) for root in expected}
