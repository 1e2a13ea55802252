import json
import typing as t
from pathlib import Path

import pytest


@pytest.fixture
def write_json(tmp_path: Path) -> t.Callable[[str, t.Any], str]:
    """Fixture that writes a JSON document under `tmp_path` and returns its path.

    Returns
    -------
    Callable[[str, Any], str]
    """

    def _write(name: str, content: t.Any) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(content))
        return path.as_posix()

    return _write


@pytest.fixture
def lattice_file(write_json: t.Callable[[str, t.Any], str]) -> t.Callable[[list[list[int]]], str]:
    """Fixture that writes a lattice file for a Gram matrix.

    Returns
    -------
    Callable[[list[list[int]]], str]
    """

    def _write(gram: list[list[int]]) -> str:
        return write_json("lattice.json", {"rank": len(gram), "gram": gram})

    return _write
