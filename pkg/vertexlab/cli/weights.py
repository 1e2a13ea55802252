import typing as t

import typer
from pydantic import RootModel

from vertexlab.bfc.weights import enumerated_weights, weights_of_degree
from vertexlab.cli.common import JsonFlag, emit, input_errors

app = typer.Typer()


class WeightList(RootModel[list[dict[str, int]]]):
    """Weights as {index: coeff} maps, the central coefficient under "c"."""


@app.command()
def weights(
    charge: t.Annotated[int, typer.Option("--charge", "-i", help="Charge of the Fock sector.")] = 0,
    degree: t.Annotated[
        int, typer.Option("--degree", "-m", help="Degree above the lowest vector.")
    ] = 0,
    enumerate_basis: t.Annotated[
        bool,
        typer.Option("--enumerate", help="Read weights off the explicit Fock basis."),
    ] = False,
    as_json: JsonFlag = False,
) -> None:
    """List the weights of ê_ii on one graded piece of the Clifford Fock space."""
    with input_errors():
        found = (
            enumerated_weights(charge, degree)
            if enumerate_basis
            else weights_of_degree(charge, degree)
        )
    out = WeightList([w.as_dict() for w in found])
    emit(out, as_json, lambda: "\n".join(str(w) for w in found))
