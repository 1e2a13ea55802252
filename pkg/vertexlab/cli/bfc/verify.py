import typing as t

import typer

from vertexlab.base.models import Report
from vertexlab.bfc.correspondence import bf_report, check_ehat_brackets
from vertexlab.cli.common import JsonFlag, finish

app = typer.Typer()


@app.command()
def verify(
    max_m: t.Annotated[int, typer.Option("--max-m", help="Largest m of p_m(n).")] = 4,
    max_n: t.Annotated[int, typer.Option("--max-n", help="Largest |n| of p_m(n).")] = 4,
    degree_cap: t.Annotated[
        int, typer.Option("--degree-cap", help="Degree bound of the Fock basis states.")
    ] = 6,
    window: t.Annotated[
        int, typer.Option("--window", help="Index bound |i|, |j| of the ê_ij brackets.")
    ] = 2,
    as_json: JsonFlag = False,
) -> None:
    """Compare the boson and fermion pictures of 𝒲 and the ê_ij bracket relations."""
    report = Report(name="bfc")
    for m in range(max_m + 1):
        for n in range(-max_n, max_n + 1):
            report.absorb(bf_report(m, n, degree_cap))
    report.absorb(check_ehat_brackets(degree_cap, window))
    finish(report, as_json)
