import typing as t

import typer

from vertexlab.base.models import ConfiguredBaseModel
from vertexlab.cli.common import EXIT_FAILURE, JsonFlag, LatticeOption, emit, input_errors, read_lattice
from vertexlab.fock import engine
from vertexlab.fock.grammar import format_state, parse_state
from vertexlab.fock.oracle import vanvb
from vertexlab.fock.state import FockState
from vertexlab.lattice.context import LatticePoint

app = typer.Typer()


class ProductOutput(ConfiguredBaseModel):
    left: str
    n: int
    right: str
    result: str
    """The product in the state grammar."""
    oracle: bool | None = None
    """Agreement with the closed formula when both operands are plain v_α."""


def _plain_vertex(state: FockState) -> LatticePoint | None:
    if len(state) != 1:
        return None
    ((mono, coeff),) = state.terms.items()
    return mono.label if not mono.modes and coeff == 1 else None


@app.command()
def product(
    lattice: LatticeOption,
    left: t.Annotated[str, typer.Option("--left", help="Left operand in the state grammar.")],
    n: t.Annotated[int, typer.Option("--n", help="Product index; any integer.")],
    right: t.Annotated[str, typer.Option("--right", help="Right operand in the state grammar.")],
    as_json: JsonFlag = False,
) -> None:
    """Compute left∟n right in the lattice vertex algebra."""
    context = read_lattice(lattice)
    with input_errors():
        u = parse_state(left, context)
        v = parse_state(right, context)
    result = engine.product(u, n, v)

    oracle = None
    alpha, beta = _plain_vertex(u), _plain_vertex(v)
    if alpha is not None and beta is not None:
        oracle = vanvb(context, alpha, n, beta) == result

    out = ProductOutput(
        left=format_state(u),
        n=n,
        right=format_state(v),
        result=format_state(result),
        oracle=oracle,
    )
    emit(out, as_json, lambda: out.result)
    if oracle is False:
        raise typer.Exit(code=EXIT_FAILURE)
