import pytest

from vertexlab.conformal.axioms import axioms_check
from vertexlab.conformal.builtins import clifford, heisenberg, n2, sl2, tkk, virasoro, weyl
from vertexlab.conformal.element import ConformalElement
from vertexlab.conformal.presentation import ConformalPresentation, Generator, TablePresentation


@pytest.mark.parametrize(
    ("presentation", "max_gen", "max_n"),
    [
        (heisenberg(), 0, 3),
        (heisenberg([[2, -1], [-1, 2]]), 0, 3),
        (clifford(), 0, 3),
        (virasoro(), 0, 4),
        (sl2(), 0, 3),
        (n2(), 0, 3),
        (n2(6), 0, 3),
        (weyl(), 2, 3),
        (tkk(), 1, 3),
    ],
    ids=lambda value: getattr(value, "name", str(value)),
)
def test_builtins_satisfy_axioms(presentation: ConformalPresentation, max_gen: int, max_n: int) -> None:
    """Verify every builtin presentation is a conformal superalgebra within the bounds."""
    report = axioms_check(presentation, max_gen, max_n)

    assert report.name == f"axioms:{presentation.name}"
    assert report.checked > 0
    assert report.passed, report.violations[:3]


@pytest.mark.slow
@pytest.mark.parametrize(
    ("presentation", "max_gen", "max_n"),
    [(weyl(), 6, 12), (tkk(), 3, 10)],
    ids=["weyl", "tkk"],
)
def test_families_satisfy_axioms_wide(presentation: ConformalPresentation, max_gen: int, max_n: int) -> None:
    """Verify the infinite families on the full generator window."""
    report = axioms_check(presentation, max_gen, max_n)

    assert report.checked > 0
    assert report.passed, report.violations[:3]


def test_broken_quasisymmetry() -> None:
    """Verify an inconsistent table is reported."""
    x = ConformalElement.generator("x")
    broken = TablePresentation(
        "broken",
        [Generator("x", 0, 1)],
        {("x", 0, "x"): x},
    )

    report = axioms_check(broken, 0, 2)

    assert not report.passed
    assert {v.check for v in report.violations} & {"C4", "grading"}


@pytest.mark.parametrize(("max_gen", "max_n"), [(-1, 0), (0, -1)])
def test_negative_bounds(max_gen: int, max_n: int) -> None:
    with pytest.raises(ValueError):
        axioms_check(sl2(), max_gen, max_n)
