import typing as t

import typer

import vertexlab
from vertexlab.fock.engine import clear_products


def version_callback(value: bool) -> None:
    """Report the installed vertexlab release for `--version`."""
    if not value:
        return
    typer.echo(vertexlab.__version__)
    raise typer.Exit()


VersionFlag: t.TypeAlias = t.Annotated[
    bool,
    typer.Option(
        "--version",
        "-v",
        is_eager=True,
        callback=version_callback,
        help="Print the vertexlab release number and exit.",
    ),
]


def common_callback(ctx: typer.Context, version: VersionFlag = False) -> None:
    """Start every command with empty product memos."""
    clear_products()
