import json
import typing as t
from pathlib import Path

import pytest
import typer

from vertexlab.cli.common import EXIT_USAGE
from vertexlab.cli.product import product


def test_product_vertex_states(
    capsys: pytest.CaptureFixture, lattice_file: t.Callable[[list[list[int]]], str]
) -> None:
    """Verify v_1∟0 v_{-1} is the vacuum in ℤα with (α|α) = 1 and matches the closed formula."""
    path = lattice_file([[1]])

    product(path, "e[1]", 0, "e[-1]", as_json=True)

    out = json.loads(capsys.readouterr().out)
    assert out["result"] == "e[0]"
    assert out["oracle"] is True


def test_product_text(capsys: pytest.CaptureFixture, lattice_file: t.Callable[[list[list[int]]], str]) -> None:
    path = lattice_file([[1]])

    product(path, "b1(-1) e[0]", 1, "b1(-1) e[0]")

    assert capsys.readouterr().out.strip() == "e[0]"


def test_product_creation(capsys: pytest.CaptureFixture, lattice_file: t.Callable[[list[list[int]]], str]) -> None:
    """Verify a∟(-1) of the vacuum returns a."""
    path = lattice_file([[2]])

    product(path, "e[1]", -1, "e[0]", as_json=True)

    out = json.loads(capsys.readouterr().out)
    assert out["result"] == "e[1]"
    assert out["oracle"] is True


@pytest.mark.parametrize("left", ["e[1", "e[1,0]", "b0(-1) e[0]", "1/0 e[1]"])
def test_product_invalid_state(
    capsys: pytest.CaptureFixture, lattice_file: t.Callable[[list[list[int]]], str], left: str
) -> None:
    path = lattice_file([[1]])

    with pytest.raises(typer.Exit) as info:
        product(path, left, 0, "e[0]")

    assert info.value.exit_code == EXIT_USAGE
    assert "Invalid input" in capsys.readouterr().out


def test_product_missing_lattice(capsys: pytest.CaptureFixture, tmp_path: Path) -> None:
    with pytest.raises(typer.Exit) as info:
        product((tmp_path / "missing.json").as_posix(), "e[0]", 0, "e[0]")

    assert info.value.exit_code == EXIT_USAGE
    assert "not found" in capsys.readouterr().out
