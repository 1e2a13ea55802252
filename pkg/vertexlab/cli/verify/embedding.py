import typing as t

import typer

from vertexlab.cli.common import JsonFlag, finish, input_errors
from vertexlab.conformal.morphism import standard_embedding, verify_morphism

app = typer.Typer()

EMBEDDINGS: t.Final[tuple[str, ...]] = (
    "heisenberg",
    "clifford",
    "sl2",
    "n2",
    "virasoro",
    "weyl",
    "tkk",
)


@app.command()
def embedding(
    algebra: t.Annotated[
        str,
        typer.Option("--algebra", "-a", help=f"One of {', '.join(EMBEDDINGS)}."),
    ],
    max_gen: t.Annotated[
        int, typer.Option("--max-gen", help="Largest family index of infinite presentations.")
    ] = 3,
    max_n: t.Annotated[int, typer.Option("--max-n", help="Largest product index.")] = 8,
    as_json: JsonFlag = False,
) -> None:
    """Check that a builtin presentation is realized inside a rank-one lattice algebra."""
    with input_errors():
        phi = standard_embedding(algebra)
        report = verify_morphism(phi.presentation, phi, max_gen, max_n)
    finish(report, as_json)
