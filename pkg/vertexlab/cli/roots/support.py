import typing as t
from fractions import Fraction

import typer

from vertexlab.cli.common import JsonFlag, LatticeOption, RootsOption, emit, input_errors, read_lattice, read_roots
from vertexlab.roots.models import SupportReport
from vertexlab.roots.support import support_closure

app = typer.Typer()


@app.command()
def support(
    lattice: LatticeOption,
    roots: RootsOption,
    degree_cap: t.Annotated[
        str, typer.Option("--degree-cap", help="Degree bound, an integer or a fraction.")
    ] = "6",
    as_json: JsonFlag = False,
) -> None:
    """Find the labels met by the conformal subalgebra generated by v_{±γ}."""
    context = read_lattice(lattice)
    gens = read_roots(roots)
    with input_errors():
        result = support_closure(gens, context, Fraction(degree_cap))
    report = SupportReport.from_result(result)
    emit(
        report,
        as_json,
        lambda: f"roots {report.roots}\nzero-component rank {report.zero_rank}",
    )
