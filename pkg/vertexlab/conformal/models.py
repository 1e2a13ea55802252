import typing as t
from fractions import Fraction
from pathlib import Path

from pydantic import NonNegativeInt

from vertexlab.base.models import ConfiguredBaseModel
from vertexlab.base.serialization import deserialize
from vertexlab.conformal.element import ConformalElement
from vertexlab.conformal.presentation import Generator, ProductKey, TablePresentation


class GeneratorSpec(ConfiguredBaseModel):
    """A generator of a user presentation."""

    id: str
    parity: t.Literal[0, 1] = 0
    degree: Fraction
    """Conformal weight; rationals such as "3/2" are accepted."""


class TermSpec(ConfiguredBaseModel):
    """One term c·D^k g of a product value."""

    generator: str
    derivative: NonNegativeInt = 0
    coeff: Fraction = Fraction(1)


class ProductSpec(ConfiguredBaseModel):
    """A table entry left∟n right = Σ terms."""

    left: str
    n: NonNegativeInt
    right: str
    result: list[TermSpec] = []


class PresentationFile(ConfiguredBaseModel):
    """On-disk finite presentation.

    Entries omitted from the table are zero; pairs given in a single order
    are completed by quasisymmetry. The central element is always named "c".
    """

    name: str
    generators: list[GeneratorSpec]
    products: list[ProductSpec] = []

    def to_presentation(self) -> TablePresentation:
        gens = [Generator(g.id, g.parity, g.degree) for g in self.generators]
        table: dict[ProductKey, ConformalElement] = {}
        for entry in self.products:
            value = ConformalElement({(term.generator, term.derivative): term.coeff for term in entry.result})
            key = (entry.left, entry.n, entry.right)
            table[key] = table.get(key, ConformalElement()) + value
        return TablePresentation(self.name, gens, table)


def load_presentation(path: Path | str) -> TablePresentation:
    """Read a finite presentation (JSON or YAML).

    Raises
    ------
    PresentationError
        If the table refers to generators that are not declared
    """
    return deserialize(path, PresentationFile).to_presentation()
