import contextlib
import json
import typing as t

import typer
from pydantic import BaseModel
from rich import print  # noqa: A004, ignore shadowing of built-in print
from rich.markup import escape

from vertexlab.base.env import ENV_VERTEXLAB_SEED, get_int_setting
from vertexlab.base.exceptions import VertexlabError
from vertexlab.base.models import Report
from vertexlab.lattice.context import LatticeContext, LatticePoint
from vertexlab.lattice.models import load_lattice
from vertexlab.roots.models import load_roots

EXIT_FAILURE: t.Final[int] = 1
"""A verification ran and found violations."""

EXIT_USAGE: t.Final[int] = 2
"""The input could not be read or is malformed."""

JsonFlag: t.TypeAlias = t.Annotated[
    bool, typer.Option("--json", help="Print machine-readable JSON instead of text.")
]
LatticeOption: t.TypeAlias = t.Annotated[
    str, typer.Option("--lattice", "-l", help="Path to a lattice file (JSON or YAML).")
]
RootsOption: t.TypeAlias = t.Annotated[
    str, typer.Option("--roots", "-r", help="Path to a root-set file.")
]
SeedOption: t.TypeAlias = t.Annotated[
    int | None,
    typer.Option("--seed", help="Seed of randomized selections; defaults to VERTEXLAB_SEED."),
]


@contextlib.contextmanager
def input_errors() -> t.Iterator[None]:
    """Turn unreadable or malformed input into exit code 2."""
    try:
        yield
    except FileNotFoundError as ex:
        print(f"[bold red]File not found:[/bold red] {escape(str(ex))}")
        raise typer.Exit(code=EXIT_USAGE) from ex
    except (ValueError, VertexlabError) as ex:
        print(f"[bold red]Invalid input:[/bold red] {escape(str(ex))}")
        raise typer.Exit(code=EXIT_USAGE) from ex


def read_lattice(path: str) -> LatticeContext:
    with input_errors():
        return load_lattice(path)


def resolve_seed(seed: int | None) -> int:
    return get_int_setting(ENV_VERTEXLAB_SEED) if seed is None else seed


def emit(model: BaseModel, as_json: bool, text: t.Callable[[], str]) -> None:
    """Write `model` as JSON or its text rendering to stdout."""
    typer.echo(model.model_dump_json(indent=2) if as_json else text())


def emit_error(message: str, witness: t.Any, as_json: bool) -> None:
    if as_json:
        typer.echo(json.dumps({"error": message, "witness": witness}, default=str, indent=2))
    else:
        print(f"[bold red]{escape(message)}[/bold red]")
        if witness is not None:
            typer.echo(f"witness: {witness}")


def report_text(report: Report) -> str:
    lines = [f"{report.name}: {report.checked} checked, {len(report.violations)} violations"]
    lines.extend(f"  {v.check}: {v.detail}" for v in report.violations[:20])
    return "\n".join(lines)


def finish(report: Report, as_json: bool) -> None:
    """Print a verification report and exit 1 when it has violations."""
    emit(report, as_json, lambda: report_text(report))
    if not report.passed:
        raise typer.Exit(code=EXIT_FAILURE)


def read_roots(path: str) -> list[LatticePoint]:
    with input_errors():
        return load_roots(path)
