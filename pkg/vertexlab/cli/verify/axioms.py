import typing as t

import typer
from rich import print  # noqa: A004, ignore shadowing of built-in print

from vertexlab.cli.common import EXIT_USAGE, JsonFlag, finish, input_errors
from vertexlab.conformal.axioms import axioms_check
from vertexlab.conformal.builtins import BUILTINS, builtin
from vertexlab.conformal.models import load_presentation

app = typer.Typer()


@app.command()
def axioms(
    algebra: t.Annotated[
        str | None,
        typer.Option("--algebra", "-a", help=f"A builtin presentation: {', '.join(BUILTINS)}."),
    ] = None,
    presentation: t.Annotated[
        str | None,
        typer.Option("--presentation", "-p", help="Path to a presentation file."),
    ] = None,
    max_gen: t.Annotated[
        int, typer.Option("--max-gen", help="Largest family index of infinite presentations.")
    ] = 6,
    max_n: t.Annotated[int, typer.Option("--max-n", help="Largest product index.")] = 12,
    as_json: JsonFlag = False,
) -> None:
    """Check the conformal algebra axioms C1-C5 on a presentation."""
    if (algebra is None) == (presentation is None):
        print("[bold red]Pass exactly one of --algebra and --presentation[/bold red]")
        raise typer.Exit(code=EXIT_USAGE)

    with input_errors():
        source = builtin(algebra) if algebra else load_presentation(t.cast(str, presentation))
        report = axioms_check(source, max_gen, max_n)
    finish(report, as_json)
