import typing as t

import typer

from vertexlab.base.exceptions import ConstraintViolation
from vertexlab.base.serialization import deserialize
from vertexlab.cli.common import EXIT_FAILURE, JsonFlag, emit, emit_error, input_errors
from vertexlab.cli.roots.close import system_text
from vertexlab.roots.models import ReconstructionFile, RootSystemReport

app = typer.Typer()


@app.command()
def reconstruct(
    path: t.Annotated[str, typer.Argument(help="Path to a reconstruction file.")],
    as_json: JsonFlag = False,
) -> None:
    """Build a finite semi-positive root system from its quotient and fiber data."""
    with input_errors():
        try:
            delta = deserialize(path, ReconstructionFile).build()
        except ConstraintViolation as ex:
            emit_error(str(ex), ex.witness, as_json)
            raise typer.Exit(code=EXIT_FAILURE) from ex
    report = RootSystemReport.from_system(delta)
    emit(report, as_json, lambda: system_text(report))
