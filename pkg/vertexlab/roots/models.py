import typing as t
from pathlib import Path

from pydantic import NonNegativeInt, RootModel, model_validator

from vertexlab.base.models import ConfiguredBaseModel, IntMatrix, IntVector
from vertexlab.base.serialization import deserialize
from vertexlab.lattice.context import LatticeContext, LatticePoint
from vertexlab.roots.reconstruct import reconstruct_finite
from vertexlab.roots.support import SupportResult
from vertexlab.roots.system import ClosureStatus, RootSystem


class RootSetFile(RootModel[list[IntVector]]):
    """On-disk root set: a list of coordinate vectors in the lattice basis."""


def load_roots(path: Path | str) -> list[LatticePoint]:
    """Read a root-set file (JSON or YAML)."""
    return [tuple(r) for r in deserialize(path, RootSetFile).root]


def _vectors(points: t.Iterable[LatticePoint]) -> list[IntVector]:
    return [list(p) for p in sorted(points)]


class RootSystemReport(ConfiguredBaseModel):
    """JSON view of a `RootSystem`."""

    status: ClosureStatus
    roots: list[IntVector]
    progressions: list[IntVector] = []
    """Isotropic directions along which the fibers continue indefinitely."""
    window: int | None = None
    label: str | None = None
    witness: list[IntVector] = []
    """Roots proving divergence or truncation."""

    @classmethod
    def from_system(cls, delta: RootSystem) -> "RootSystemReport":
        return cls(
            status=delta.status,
            roots=_vectors(delta.roots),
            progressions=_vectors(delta.progressions),
            window=delta.window,
            label=delta.label,
            witness=[list(w) for w in delta.witness],
        )


class ComponentReport(ConfiguredBaseModel):
    label: str
    roots: list[IntVector]


class ClassificationReport(ConfiguredBaseModel):
    """Labels of the indecomposable components, or the reason classification failed."""

    components: list[ComponentReport] = []
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None


class SupportComponent(ConfiguredBaseModel):
    label: IntVector
    degree: str
    dimension: int


class SupportReport(ConfiguredBaseModel):
    degree_cap: str
    roots: list[IntVector]
    """Nonzero labels met by the generated subalgebra."""
    zero_rank: int
    """Rank over 𝕜[D] of the zero-label component found below the cap."""
    components: list[SupportComponent]

    @classmethod
    def from_result(cls, result: SupportResult) -> "SupportReport":
        return cls(
            degree_cap=str(result.degree_cap),
            roots=_vectors(result.roots),
            zero_rank=result.rank(result.lattice.zero()),
            components=[
                SupportComponent(label=list(label), degree=str(degree), dimension=dim)
                for (label, degree), dim in sorted(result.dimensions.items())
            ],
        )


class FiberSpec(ConfiguredBaseModel):
    """Σ(β): the isotropic vectors lifted over a short root."""

    root: IntVector
    shifts: list[IntVector]


class ShiftSpec(ConfiguredBaseModel):
    """δ(α) for a long root α in Ω."""

    root: IntVector
    shift: IntVector


class ReconstructionFile(ConfiguredBaseModel):
    """On-disk input of the finite semi-positive reconstruction."""

    gram: IntMatrix
    """Gram matrix of the positive definite quotient lattice."""
    roots: list[IntVector]
    """The quotient root system Δ̄."""
    isotropic_rank: NonNegativeInt
    fibers: list[FiberSpec]
    shifts: list[ShiftSpec] = []

    @model_validator(mode="after")
    def _check_shape(self) -> "ReconstructionFile":
        rank = len(self.gram)
        for vector in [*self.roots, *(f.root for f in self.fibers), *(s.root for s in self.shifts)]:
            if len(vector) != rank:
                msg = f"Root {vector} does not have rank {rank}"
                raise ValueError(msg)
        return self

    def build(self) -> RootSystem:
        return reconstruct_finite(
            RootSystem.of(LatticeContext(self.gram), self.roots),
            self.isotropic_rank,
            {tuple(f.root): f.shifts for f in self.fibers},
            {tuple(s.root): s.shift for s in self.shifts},
        )
