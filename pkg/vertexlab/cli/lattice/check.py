import typing as t

import typer

from vertexlab.cli.common import JsonFlag, emit, read_lattice
from vertexlab.lattice.models import LatticeSummary

app = typer.Typer()


@app.command()
def check(
    path: t.Annotated[str, typer.Argument(help="Path to a lattice file.")],
    as_json: JsonFlag = False,
) -> None:
    """Validate a lattice file and report its definiteness and radical."""
    summary = LatticeSummary.from_context(read_lattice(path))
    emit(
        summary,
        as_json,
        lambda: (
            f"rank {summary.rank}, {summary.definiteness}, "
            f"quotient rank {summary.quotient_rank}, radical {summary.radical}"
        ),
    )
