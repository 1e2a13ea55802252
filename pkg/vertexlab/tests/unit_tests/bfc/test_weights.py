import pytest

from vertexlab.base.exceptions import StateError
from vertexlab.bfc.clifford import CliffordFockState, CliffordMonomial
from vertexlab.bfc.weights import (
    Weight,
    enumerated_weights,
    length,
    lowest_weight,
    monomial_weight,
    weight,
    weights_of_degree,
    wplus_span,
)
from vertexlab.foundation.partitions import partitions


def test_weight_basics() -> None:
    w = Weight.from_mapping({0: -1, -1: 1, 3: 0})

    assert w.coeffs == ((-1, 1), (0, -1))
    assert w.length == 1
    assert length(w) == 1
    assert str(w) == "λc + λ-1 - λ0"
    assert w.as_dict() == {"c": 1, "-1": 1, "0": -1}
    assert w.conjugate() == Weight.from_mapping({0: -1, -1: 1})
    assert str(Weight()) == "λc"


def test_monomial_weight() -> None:
    """Verify γ_{-1}(i) contributes λ_i and γ_1(n) contributes -λ_{-n-1}."""
    mono = CliffordMonomial((-3,), (-1,))

    assert monomial_weight(mono) == Weight.from_mapping({-3: 1, 0: -1})
    assert weight(CliffordFockState({mono: 2})) == monomial_weight(mono)


def test_weight_of_combination() -> None:
    state = CliffordFockState.vacuum() + CliffordFockState.monomial(minus=(-1,), plus=(-1,))

    with pytest.raises(StateError):
        weight(state)


@pytest.mark.parametrize("m", range(7))
def test_charge_zero_weights_are_distinct(m: int) -> None:
    """Verify each charge-zero weight space of degree m is one-dimensional."""
    predicted = weights_of_degree(0, m)

    assert len(predicted) == len(partitions(m))
    assert len(set(predicted)) == len(predicted)


@pytest.mark.parametrize("charge", [-2, -1, 0, 1, 2])
@pytest.mark.parametrize("m", range(5))
def test_prediction_matches_enumeration(charge: int, m: int) -> None:
    """Verify weights built from Frobenius coordinates match the monomial weights."""
    assert weights_of_degree(charge, m) == enumerated_weights(charge, m)


def test_frobenius_weight_example() -> None:
    """Verify the weight of the hook ⟨(2)|(0)⟩ of degree 2."""
    assert Weight.from_mapping({-2: 1, 0: -1}) in weights_of_degree(0, 2)
    assert Weight.from_mapping({-1: 1, 1: -1}) in weights_of_degree(0, 2)


@pytest.mark.parametrize(
    ("charge", "expected"),
    [
        (0, Weight()),
        (1, Weight.from_mapping({0: -1})),
        (2, Weight.from_mapping({0: -1, 1: -1})),
        (-1, Weight.from_mapping({-1: 1})),
    ],
)
def test_lowest_weight(charge: int, expected: Weight) -> None:
    assert lowest_weight(charge) == expected


def test_wplus_span_vacuum() -> None:
    """Verify the vacuum line is preserved by the nonnegative modes."""
    assert wplus_span(CliffordFockState.vacuum(), 3) == {Weight()}


def test_wplus_span_length_one() -> None:
    """Verify the span from a length-one weight vector is every weight of length at most one."""
    v = CliffordFockState.monomial(minus=(-1,), plus=(-1,))
    cap = 4

    span = wplus_span(v, cap)

    expected = {w for m in range(cap + 1) for w in weights_of_degree(0, m) if w.length <= 1}
    assert span == expected
    assert Weight.from_mapping({-2: 1, -1: 1, 0: -1, 1: -1}) not in span


def test_wplus_span_inhomogeneous() -> None:
    state = CliffordFockState.vacuum() + CliffordFockState.monomial(minus=(-1,), plus=(-1,))

    with pytest.raises(StateError):
        wplus_span(state, 2)
