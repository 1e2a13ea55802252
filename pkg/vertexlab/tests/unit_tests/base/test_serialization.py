from pathlib import Path

import pytest
from pydantic import ValidationError

from vertexlab.base.serialization import PersistenceMode, deserialize, serialize
from vertexlab.lattice.models import LatticeFile


@pytest.fixture
def lattice_file() -> LatticeFile:
    return LatticeFile(rank=2, gram=[[2, -1], [-1, 2]])


@pytest.mark.parametrize("suffix", [".json", ".yaml", ".yml"])
def test_round_trip(tmp_path: Path, lattice_file: LatticeFile, suffix: str) -> None:
    """Verify a model written to disk reads back unchanged."""
    path = tmp_path / f"a2{suffix}"

    written = serialize(path, lattice_file)

    assert written > 0
    assert deserialize(path, LatticeFile) == lattice_file


def test_unknown_suffix_reads_yaml(tmp_path: Path) -> None:
    """Verify files without a known suffix are parsed as YAML, which includes JSON."""
    path = tmp_path / "lattice.txt"
    path.write_text('{"rank": 1, "gram": [[4]]}')

    model = deserialize(path, LatticeFile)

    assert model.gram == [[4]]


def test_explicit_mode(tmp_path: Path) -> None:
    """Verify the persistence mode can be forced."""
    path = tmp_path / "lattice.json"
    path.write_text("rank: 1\ngram:\n  - [3]\n")

    model = deserialize(path, LatticeFile, PersistenceMode.yaml)

    assert model.rank == 1


def test_missing_file(tmp_path: Path) -> None:
    """Verify a missing file is reported."""
    with pytest.raises(FileNotFoundError):
        deserialize(tmp_path / "missing.json", LatticeFile)


@pytest.mark.parametrize(
    "content",
    [
        '{"rank": 2, "gram": [[1, 0], [1, 1]]}',
        '{"rank": 2, "gram": [[1, 0]]}',
        '{"rank": 1, "gram": [[1]], "extra": true}',
        '{"rank": 1, "gram": [[1.5]]}',
    ],
)
def test_invalid_content(tmp_path: Path, content: str) -> None:
    """Verify malformed lattice definitions fail validation."""
    path = tmp_path / "bad.json"
    path.write_text(content)

    with pytest.raises(ValidationError):
        deserialize(path, LatticeFile)
