import typing as t

import typer

from vertexlab.cli.common import EXIT_FAILURE, JsonFlag, LatticeOption, RootsOption, emit_error, finish, input_errors, read_lattice, read_roots
from vertexlab.roots.ears import check_ears
from vertexlab.roots.system import DEFAULT_WINDOW
from vertexlab.roots.system import close as close_roots

app = typer.Typer()


@app.command()
def ears(
    lattice: LatticeOption,
    roots: RootsOption,
    window: t.Annotated[
        int, typer.Option("--window", help="Bound on radical coordinates of stored roots.")
    ] = DEFAULT_WINDOW,
    as_json: JsonFlag = False,
) -> None:
    """Close the generators and check the indecomposability and δ + α conditions."""
    context = read_lattice(lattice)
    gens = read_roots(roots)
    with input_errors():
        delta = close_roots(gens, context, window=window)
    if not delta.status.closed:
        emit_error(f"Closure ended {delta.status}", [list(w) for w in delta.witness], as_json)
        raise typer.Exit(code=EXIT_FAILURE)
    finish(check_ears(delta), as_json)
