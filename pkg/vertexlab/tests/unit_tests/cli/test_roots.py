import json
import typing as t

import pytest
import typer

from vertexlab.cli.common import EXIT_FAILURE
from vertexlab.cli.reconstruct import reconstruct
from vertexlab.cli.roots.classify import classify
from vertexlab.cli.roots.close import close
from vertexlab.cli.roots.ears import ears
from vertexlab.cli.roots.support import support

A2 = [[2, -1], [-1, 2]]

LatticeFile: t.TypeAlias = t.Callable[[list[list[int]]], str]
JsonFile: t.TypeAlias = t.Callable[[str, t.Any], str]


def test_close_a2(capsys: pytest.CaptureFixture, lattice_file: LatticeFile, write_json: JsonFile) -> None:
    close(lattice_file(A2), write_json("roots.json", [[1, 0], [0, 1]]), as_json=True)

    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "closed-finite"
    assert len(out["roots"]) == 6


def test_close_diverged(capsys: pytest.CaptureFixture, lattice_file: LatticeFile, write_json: JsonFile) -> None:
    """Verify an inadmissible pair exits with status 1 and prints the witness."""
    with pytest.raises(typer.Exit) as info:
        close(lattice_file([[3, -1], [-1, 3]]), write_json("roots.json", [[1, 0], [0, 1]]))

    assert info.value.exit_code == EXIT_FAILURE
    out = capsys.readouterr().out
    assert out.startswith("diverged")
    assert "witness" in out


def test_classify(capsys: pytest.CaptureFixture, lattice_file: LatticeFile, write_json: JsonFile) -> None:
    classify(lattice_file(A2), write_json("roots.json", [[1, 0], [0, 1]]), close_first=True)

    assert capsys.readouterr().out.strip() == "A(2)"


def test_classify_unclosed(capsys: pytest.CaptureFixture, lattice_file: LatticeFile, write_json: JsonFile) -> None:
    with pytest.raises(typer.Exit) as info:
        classify(lattice_file(A2), write_json("roots.json", [[1, 0], [-1, 0], [0, 1], [0, -1]]), as_json=True)

    assert info.value.exit_code == EXIT_FAILURE
    out = json.loads(capsys.readouterr().out)
    assert "not closed" in out["error"]
    assert out["components"] == []


def test_support(capsys: pytest.CaptureFixture, lattice_file: LatticeFile, write_json: JsonFile) -> None:
    support(lattice_file([[2]]), write_json("roots.json", [[1]]), degree_cap="2", as_json=True)

    out = json.loads(capsys.readouterr().out)
    assert out["roots"] == [[-1], [1]]
    assert out["zero_rank"] == 1


def test_ears(capsys: pytest.CaptureFixture, lattice_file: LatticeFile, write_json: JsonFile) -> None:
    ears(lattice_file([[2, -2], [-2, 2]]), write_json("roots.json", [[1, 0], [0, 1]]), window=2)

    assert "0 violations" in capsys.readouterr().out


def test_ears_diverged(capsys: pytest.CaptureFixture, lattice_file: LatticeFile, write_json: JsonFile) -> None:
    with pytest.raises(typer.Exit) as info:
        ears(lattice_file([[3, -1], [-1, 3]]), write_json("roots.json", [[1, 0], [0, 1]]), as_json=True)

    assert info.value.exit_code == EXIT_FAILURE
    out = json.loads(capsys.readouterr().out)
    assert "diverged" in out["error"]


def _reconstruction(fiber: list[list[int]]) -> dict:
    return {
        "gram": [[1]],
        "roots": [[1], [-1]],
        "isotropic_rank": 1,
        "fibers": [{"root": [1], "shifts": fiber}, {"root": [-1], "shifts": fiber}],
    }


def test_reconstruct(capsys: pytest.CaptureFixture, write_json: JsonFile) -> None:
    reconstruct(write_json("fibers.json", _reconstruction([[0], [1], [-1]])), as_json=True)

    out = json.loads(capsys.readouterr().out)
    assert out["label"] == "B(1) with isotropic rank 1"
    assert len(out["roots"]) == 10


def test_reconstruct_violation(capsys: pytest.CaptureFixture, write_json: JsonFile) -> None:
    """Verify a broken constraint exits with status 1 and reports the witness."""
    with pytest.raises(typer.Exit) as info:
        reconstruct(write_json("fibers.json", _reconstruction([[1]])), as_json=True)

    assert info.value.exit_code == EXIT_FAILURE
    out = json.loads(capsys.readouterr().out)
    assert "not symmetric" in out["error"]
    assert out["witness"] is not None
