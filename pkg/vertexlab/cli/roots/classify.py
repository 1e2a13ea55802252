import typing as t

import typer

from vertexlab.base.exceptions import RootSystemError
from vertexlab.cli.common import EXIT_FAILURE, JsonFlag, LatticeOption, RootsOption, emit, input_errors, read_lattice, read_roots
from vertexlab.roots.cartan import classify_posdef, components
from vertexlab.roots.models import ClassificationReport, ComponentReport
from vertexlab.roots.system import RootSystem
from vertexlab.roots.system import close as close_roots

app = typer.Typer()


@app.command()
def classify(
    lattice: LatticeOption,
    roots: RootsOption,
    close_first: t.Annotated[
        bool,
        typer.Option("--close/--no-close", help="Close the given roots before classifying."),
    ] = False,
    as_json: JsonFlag = False,
) -> None:
    """Label the indecomposable components of a finite positive definite root system."""
    context = read_lattice(lattice)
    points = read_roots(roots)
    with input_errors():
        delta = close_roots(points, context) if close_first else RootSystem.of(context, points)

    try:
        labels = classify_posdef(delta)
    except RootSystemError as ex:
        report = ClassificationReport(error=str(ex))
        emit(report, as_json, lambda: f"not classifiable: {ex}")
        raise typer.Exit(code=EXIT_FAILURE) from ex

    report = ClassificationReport(
        components=[
            ComponentReport(label=str(label), roots=[list(r) for r in part])
            for label, part in zip(labels, components(delta), strict=True)
        ]
    )
    emit(report, as_json, lambda: ", ".join(c.label for c in report.components))
