from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vertexlab.base.exceptions import LatticeError, LatticeMismatchError
from vertexlab.lattice.context import Definiteness, LatticeContext, add, neg, scale

GRAMS = [
    [[1]],
    [[2, -1], [-1, 2]],
    [[1, 0], [0, 1]],
    [[2, 1], [1, 3]],
    [[2, -2], [-2, 2]],
    [[1, 0, 0], [0, 1, 0], [0, 0, 0]],
]

points = st.lists(st.integers(min_value=-4, max_value=4), min_size=2, max_size=2).map(tuple)


@pytest.mark.parametrize(
    "gram",
    [[], [[1, 0]], [[1, 2], [3, 1]], [[1, 0], [0]]],
)
def test_invalid_gram(gram: list[list[int]]) -> None:
    """Verify empty, non-square and non-symmetric matrices are rejected."""
    with pytest.raises(LatticeError):
        LatticeContext(gram)


def test_inner(a2: LatticeContext) -> None:
    assert a2.rank == 2
    assert a2.inner((1, 0), (0, 1)) == -1
    assert a2.norm((1, 1)) == 2
    assert a2.pairing((Fraction(1, 2), 0), 1) == Fraction(-1, 2)


def test_mismatch(a2: LatticeContext) -> None:
    """Verify vectors of the wrong length are rejected."""
    with pytest.raises(LatticeMismatchError):
        a2.inner((1, 0, 0), (1, 0))

    with pytest.raises(LatticeMismatchError):
        a2.epsilon((1,), (0, 1))


def test_basis_and_vector_helpers(a2: LatticeContext) -> None:
    assert a2.zero() == (0, 0)
    assert a2.basis(1) == (0, 1)
    assert add((1, 2), (3, -1)) == (4, 1)
    assert neg((1, -2)) == (-1, 2)
    assert scale(3, (1, -2)) == (3, -6)


@pytest.mark.parametrize(
    ("gram", "expected"),
    [
        ([[2, -1], [-1, 2]], Definiteness.POSITIVE),
        ([[1]], Definiteness.POSITIVE),
        ([[2, -2], [-2, 2]], Definiteness.SEMI_POSITIVE),
        ([[4, -2], [-2, 1]], Definiteness.SEMI_POSITIVE),
        ([[0]], Definiteness.SEMI_POSITIVE),
        ([[0, 1], [1, 0]], Definiteness.INDEFINITE),
        ([[1, 2], [2, 1]], Definiteness.INDEFINITE),
    ],
)
def test_definiteness(gram: list[list[int]], expected: Definiteness) -> None:
    assert LatticeContext(gram).definiteness == expected


@pytest.mark.parametrize(
    ("gram", "generator"),
    [
        ([[2, -2], [-2, 2]], (1, 1)),
        ([[4, -2], [-2, 1]], (1, 2)),
        ([[1, 0, 0], [0, 1, 0], [0, 0, 0]], (0, 0, 1)),
    ],
)
def test_radical(gram: list[list[int]], generator: tuple[int, ...]) -> None:
    """Verify the radical of a rank-one-degenerate form, up to sign."""
    lattice = LatticeContext(gram)

    radical = lattice.radical()

    assert len(radical) == 1
    assert radical[0] in {generator, neg(generator)}
    assert lattice.is_degenerate
    assert lattice.quotient_rank == lattice.rank - 1


def test_nondegenerate_radical(a2: LatticeContext) -> None:
    assert a2.radical() == []
    assert not a2.is_degenerate
    assert a2.quotient_rank == 2


def test_epsilon_on_basis(a2: LatticeContext) -> None:
    """Verify the cocycle is trivial on ordered basis pairs and forced otherwise."""
    assert a2.epsilon((1, 0), (0, 1)) == 1
    assert a2.epsilon((0, 1), (1, 0)) == -1
    assert a2.epsilon((1, 0), (1, 0)) == 1


@pytest.mark.parametrize("gram", [g for g in GRAMS if len(g) == 2])
@given(a=points, b=points)
def test_epsilon_commutation(gram: list[list[int]], a: tuple[int, ...], b: tuple[int, ...]) -> None:
    """Verify ε(a,b) = (-1)^{(a|a)(b|b)+(a|b)} ε(b,a)."""
    lattice = LatticeContext(gram)
    exponent = int(lattice.norm(a) * lattice.norm(b) + lattice.inner(a, b))

    assert lattice.epsilon(a, b) == (-1) ** (exponent % 2) * lattice.epsilon(b, a)


@pytest.mark.parametrize("gram", [g for g in GRAMS if len(g) == 2])
@given(a=points, b=points, c=points)
def test_epsilon_bimultiplicative(
    gram: list[list[int]],
    a: tuple[int, ...],
    b: tuple[int, ...],
    c: tuple[int, ...],
) -> None:
    lattice = LatticeContext(gram)

    assert lattice.epsilon(add(a, b), c) == lattice.epsilon(a, c) * lattice.epsilon(b, c)
    assert lattice.epsilon(a, add(b, c)) == lattice.epsilon(a, b) * lattice.epsilon(a, c)


@pytest.mark.parametrize("gram", [g for g in GRAMS if len(g) == 2])
@given(a=points)
def test_coordinates_round_trip(gram: list[list[int]], a: tuple[int, ...]) -> None:
    lattice = LatticeContext(gram)

    quotient, radical = lattice.coordinates(a)

    assert lattice.from_coordinates(quotient, radical) == a


@given(a=points, b=points)
def test_project_preserves_form(a: tuple[int, ...], b: tuple[int, ...]) -> None:
    """Verify the quotient form agrees with the form on the lattice."""
    lattice = LatticeContext([[4, -2], [-2, 1]])

    assert lattice.quotient_inner(lattice.project(a), lattice.project(b)) == lattice.inner(a, b)


def test_project_kills_radical() -> None:
    lattice = LatticeContext([[2, -2], [-2, 2]])

    assert lattice.project(lattice.radical()[0]) == (0,)
    assert lattice.project((1, 0)) in {(1,), (-1,)}


@pytest.mark.parametrize(
    ("gram", "expected"),
    [
        ([[2, -2], [-2, 2]], ((2,),)),
        ([[4, -2], [-2, 1]], ((1,),)),
        ([[0]], ()),
    ],
)
def test_quotient_gram(gram: list[list[int]], expected: tuple[tuple[int, ...], ...]) -> None:
    lattice = LatticeContext(gram)

    assert lattice.quotient_gram == expected
    assert lattice.quotient_rank == len(expected)


def test_quotient_gram_nondegenerate(a2: LatticeContext) -> None:
    """A unimodular change of basis keeps the determinant."""
    (a, b), (c, d) = a2.quotient_gram

    assert a2.quotient_rank == 2
    assert a * d - b * c == 3


def test_project_indefinite() -> None:
    with pytest.raises(LatticeError):
        LatticeContext([[0, 1], [1, 0]]).project((1, 0))


def test_dual_basis(a2: LatticeContext) -> None:
    """Verify (h_i | e_j) = δ_ij."""
    duals = a2.dual_basis()

    assert duals[0] == (Fraction(2, 3), Fraction(1, 3))
    for i, h in enumerate(duals):
        assert [a2.pairing(h, j) for j in range(2)] == [int(i == j) for j in range(2)]


def test_dual_basis_degenerate() -> None:
    with pytest.raises(LatticeError):
        LatticeContext([[2, -2], [-2, 2]]).dual_basis()


def test_equality(a2: LatticeContext) -> None:
    assert a2 == LatticeContext([[2, -1], [-1, 2]])
    assert hash(a2) == hash(LatticeContext([[2, -1], [-1, 2]]))
    assert a2 != LatticeContext([[2, 1], [1, 2]])
