from pathlib import Path

from pydantic import PositiveInt, model_validator

from vertexlab.base.models import ConfiguredBaseModel, IntMatrix, IntVector
from vertexlab.base.serialization import deserialize
from vertexlab.lattice.context import Definiteness, LatticeContext


class LatticeFile(ConfiguredBaseModel):
    """On-disk description of a lattice: `{"rank": l, "gram": [[...]]}`."""

    rank: PositiveInt
    """Number of basis vectors."""
    gram: IntMatrix
    """Symmetric integer Gram matrix in the fixed basis."""

    @model_validator(mode="after")
    def _check_gram(self) -> "LatticeFile":
        if len(self.gram) != self.rank or any(len(r) != self.rank for r in self.gram):
            msg = f"Gram matrix must be {self.rank}x{self.rank}"
            raise ValueError(msg)
        for i, row in enumerate(self.gram):
            for j, value in enumerate(row):
                if value != self.gram[j][i]:
                    msg = f"Gram matrix is not symmetric at ({i + 1}, {j + 1})"
                    raise ValueError(msg)
        return self

    def to_context(self) -> LatticeContext:
        return LatticeContext(self.gram)

    @classmethod
    def from_context(cls, lattice: LatticeContext) -> "LatticeFile":
        return cls(rank=lattice.rank, gram=[list(r) for r in lattice.gram])


def load_lattice(path: Path | str) -> LatticeContext:
    """Read and validate a lattice definition file (JSON or YAML)."""
    return deserialize(path, LatticeFile).to_context()


class LatticeSummary(ConfiguredBaseModel):
    """Derived data of a lattice as printed by `vertexlab lattice check`."""

    rank: int
    definiteness: Definiteness
    quotient_rank: int
    """Rank of the image in the quotient by the radical."""
    radical: list[IntVector]
    """A ℤ-basis of the vectors orthogonal to the whole lattice."""

    @classmethod
    def from_context(cls, lattice: LatticeContext) -> "LatticeSummary":
        return cls(
            rank=lattice.rank,
            definiteness=lattice.definiteness,
            quotient_rank=lattice.quotient_rank,
            radical=[list(v) for v in lattice.radical()],
        )
