import enum
import typing as t
from pathlib import Path

import yaml
from pydantic import BaseModel

from vertexlab.base.log import get_logger

log = get_logger(__name__)


class PersistenceMode(enum.StrEnum):
    """Supported serialization engines."""

    json = enum.auto()
    yaml = enum.auto()
    auto = enum.auto()


_T = t.TypeVar("_T", bound=BaseModel)


def _read_json(path: Path, klass: type[_T]) -> _T:
    with path.open("r", encoding="utf-8") as fp:
        return klass.model_validate_json(fp.read())


def _read_yaml(path: Path, klass: type[_T]) -> _T:
    with path.open("r", encoding="utf-8") as fp:
        return klass.model_validate(yaml.safe_load(fp))


def model_to_yaml(model: BaseModel) -> str:
    """Serialize a model to YAML through its JSON-compatible dump."""
    return yaml.safe_dump(model.model_dump(mode="json"), sort_keys=False)


def _mode_detect(path: Path) -> PersistenceMode:
    """Use the file extension to select the persistence mode.

    Files without a recognized suffix are read as YAML, which also accepts JSON.
    """
    if path.suffix == ".json":
        return PersistenceMode.json

    if path.suffix not in {".yaml", ".yml"}:
        log.debug(f"Using persistence mode `yaml` for file `{path}`")
    return PersistenceMode.yaml


def deserialize(
    path: Path | str,
    klass: type[_T],
    mode: PersistenceMode = PersistenceMode.auto,
) -> _T:
    """Load a model from a JSON or YAML document.

    Parameters
    ----------
    path : Path | str
        The location of the document
    klass : type[_T]
        The model type to instantiate
    mode : PersistenceMode
        The document format. `auto` selects based on the file extension.

    Raises
    ------
    FileNotFoundError
        If the file does not exist
    ValueError
        If the document is empty or does not validate against `klass`

    Returns
    -------
    _T
    """
    path = Path(path)

    if not path.exists():
        msg = f"No file found at path `{path}` to deserialize to `{klass.__name__}`"
        raise FileNotFoundError(msg)

    if mode == PersistenceMode.auto:
        mode = _mode_detect(path)

    handlers = {
        PersistenceMode.json: _read_json,
        PersistenceMode.yaml: _read_yaml,
    }

    return handlers[mode](path, klass)


def serialize(
    path: Path,
    model: BaseModel,
    mode: PersistenceMode = PersistenceMode.auto,
) -> int:
    """Write a model to a JSON or YAML document.

    Returns
    -------
    int
        The number of characters written.
    """
    if mode == PersistenceMode.auto:
        mode = _mode_detect(path)

    handlers: dict[PersistenceMode, t.Callable[[BaseModel], str]] = {
        PersistenceMode.json: lambda m: m.model_dump_json(indent=2),
        PersistenceMode.yaml: model_to_yaml,
    }

    path.parent.mkdir(parents=True, exist_ok=True)
    return path.write_text(handlers[mode](model), encoding="utf-8")
