import random
import typing as t

import typer

from vertexlab.base.models import Report
from vertexlab.base.utils import parallel_map
from vertexlab.cli.common import JsonFlag, LatticeOption, SeedOption, finish, read_lattice, resolve_seed
from vertexlab.fock.grammar import format_state
from vertexlab.fock.identities import check_jacobi, check_qs
from vertexlab.fock.sampling import random_homogeneous
from vertexlab.fock.state import FockState

app = typer.Typer()

Sample: t.TypeAlias = tuple[FockState, FockState, FockState, int, int]


@app.command()
def identities(
    lattice: LatticeOption,
    samples: t.Annotated[int, typer.Option("--samples", help="Number of random triples.")] = 200,
    max_degree: t.Annotated[
        int, typer.Option("--max-degree", help="Degree bound of the sampled states.")
    ] = 5,
    max_n: t.Annotated[
        int, typer.Option("--max-n", help="Product indices are drawn from [-max_n, max_n].")
    ] = 3,
    seed: SeedOption = None,
    as_json: JsonFlag = False,
) -> None:
    """Check quasi-symmetry and the Jacobi identity on random homogeneous states."""
    context = read_lattice(lattice)
    rng = random.Random(resolve_seed(seed))
    drawn: list[Sample] = [
        (
            random_homogeneous(context, max_degree, rng),
            random_homogeneous(context, max_degree, rng),
            random_homogeneous(context, max_degree, rng),
            rng.randint(-max_n, max_n),
            rng.randint(-max_n, max_n),
        )
        for _ in range(samples)
    ]

    def run(sample: Sample) -> list[tuple[str, bool, str]]:
        a, b, c, m, n = sample
        where = f"a={format_state(a)}, b={format_state(b)}"
        out = [
            ("quasi-symmetry", check_qs(a, b, k), f"{where}, n={k}")
            for k in range(-max_n, max_n + 1)
        ]
        out.append(
            ("jacobi", check_jacobi(a, b, c, m, n), f"{where}, c={format_state(c)}, m={m}, n={n}")
        )
        return out

    report = Report(name=f"identities:{context!r}")
    for outcomes in parallel_map(run, drawn):
        for check, ok, detail in outcomes:
            report.record(check, ok, lambda detail=detail: detail)
    finish(report, as_json)
