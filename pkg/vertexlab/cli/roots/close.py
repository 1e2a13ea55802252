import typing as t

import typer

from vertexlab.cli.common import EXIT_FAILURE, JsonFlag, LatticeOption, RootsOption, emit, input_errors, read_lattice, read_roots
from vertexlab.roots.models import RootSystemReport
from vertexlab.roots.system import DEFAULT_MAX_ITER, DEFAULT_MAX_NORM, DEFAULT_WINDOW
from vertexlab.roots.system import close as close_roots

app = typer.Typer()


def system_text(report: RootSystemReport) -> str:
    lines = [f"{report.status}: {len(report.roots)} roots"]
    if report.label:
        lines.append(f"label: {report.label}")
    lines.extend(f"  {root}" for root in report.roots)
    if report.progressions:
        lines.append(f"progressions: {report.progressions} (window {report.window})")
    if report.witness:
        lines.append(f"witness: {report.witness}")
    return "\n".join(lines)


@app.command()
def close(
    lattice: LatticeOption,
    roots: RootsOption,
    max_norm: t.Annotated[
        int, typer.Option("--max-norm", help="Stop when a root exceeds this norm.")
    ] = DEFAULT_MAX_NORM,
    max_iter: t.Annotated[
        int, typer.Option("--max-iter", help="Bound on processed roots.")
    ] = DEFAULT_MAX_ITER,
    window: t.Annotated[
        int, typer.Option("--window", help="Bound on radical coordinates of stored roots.")
    ] = DEFAULT_WINDOW,
    as_json: JsonFlag = False,
) -> None:
    """Close a set of generators under partial summation."""
    context = read_lattice(lattice)
    gens = read_roots(roots)
    with input_errors():
        delta = close_roots(gens, context, max_norm, max_iter, window)
    report = RootSystemReport.from_system(delta)
    emit(report, as_json, lambda: system_text(report))
    if not delta.status.closed:
        raise typer.Exit(code=EXIT_FAILURE)
