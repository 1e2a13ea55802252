from pathlib import Path

from vertexlab.base.serialization import serialize
from vertexlab.lattice.context import Definiteness, LatticeContext
from vertexlab.lattice.models import LatticeFile, LatticeSummary, load_lattice


def test_load_lattice(tmp_path: Path, a2: LatticeContext) -> None:
    path = tmp_path / "a2.yaml"
    serialize(path, LatticeFile.from_context(a2))

    assert load_lattice(path) == a2


def test_summary_positive(a2: LatticeContext) -> None:
    summary = LatticeSummary.from_context(a2)

    assert summary.rank == 2
    assert summary.definiteness == Definiteness.POSITIVE
    assert summary.quotient_rank == 2
    assert summary.radical == []


def test_summary_degenerate() -> None:
    summary = LatticeSummary.from_context(LatticeContext([[4, -2], [-2, 1]]))

    assert summary.definiteness == Definiteness.SEMI_POSITIVE
    assert summary.quotient_rank == 1
    assert summary.radical in ([[1, 2]], [[-1, -2]])
    assert summary.model_dump(mode="json")["definiteness"] == "semi-positive-definite"
