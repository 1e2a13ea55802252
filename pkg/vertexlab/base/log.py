import logging
import sys
from pathlib import Path

from vertexlab.base.env import ENV_VERTEXLAB_LOG_LEVEL, get_env_item

DEFAULT_LOG_FORMAT = "%(asctime)s [%(levelname)s] - %(name)s:%(lineno)d - %(message)s"


def parse_log_level_name(log_level: int | str) -> int:
    """Convert a level name such as `debug` to its numeric value.

    Raises
    ------
    ValueError
        If the name is not a known logging level
    """
    if isinstance(log_level, int):
        return log_level

    mapping = logging.getLevelNamesMapping()
    if (level := mapping.get(log_level.strip().upper())) is None:
        msg = f"Unknown log level: {log_level}"
        raise ValueError(msg)
    return level


def register_file_handler(
    logger: logging.Logger,
    filename: str | Path,
    level: int = logging.INFO,
    fmt: str = DEFAULT_LOG_FORMAT,
) -> logging.FileHandler:
    """Attach a file handler to the logger unless one already writes to `filename`.

    Parameters
    ----------
    logger : logging.Logger
        The logger to modify
    filename : str or Path
        The desired log file path
    level : int
        The log level for a new handler
    fmt : str
        The log format to apply to the handler

    Returns
    -------
    logging.FileHandler
        The new or pre-existing handler for the path

    Raises
    ------
    ValueError
        If `filename` is blank
    """
    if isinstance(filename, str) and not filename.strip():
        raise ValueError("A log file path is required.")

    file_path = Path(filename).resolve()
    file_path.parent.mkdir(parents=True, exist_ok=True)

    for handler in logger.handlers:
        if (
            isinstance(handler, logging.FileHandler)
            and Path(handler.baseFilename).resolve() == file_path
        ):
            return handler

    file_handler = logging.FileHandler(file_path)
    file_handler.setLevel(level)
    file_handler.setFormatter(logging.Formatter(fmt=fmt))
    logger.addHandler(file_handler)
    logger.debug(f"Writing log records to: {file_path}")
    return file_handler


def get_logger(
    name: str | None = None,
    level: int | None = None,
    fmt: str | None = None,
    filename: str | Path | None = None,
) -> logging.Logger:
    """Get a configured logger.

    Records below WARNING are written to stdout by a handler owned by the
    logger; WARNING and above propagate to the root handler on stderr.

    Parameters
    ----------
    name: str
        The name of the logger.
    level: int
        The minimum log level to write. Defaults to `VERTEXLAB_LOG_LEVEL`.
    fmt: str
        The log format string.
    filename: str | Path | None
        An optional file path where logs are also written.

    Returns
    -------
    logging.Logger
    """
    fmt = fmt or DEFAULT_LOG_FORMAT
    level = level or parse_log_level_name(
        get_env_item(ENV_VERTEXLAB_LOG_LEVEL).value
    )

    logger = logging.getLogger(name)
    logger.propagate = False
    logger.setLevel(level)

    root = logging.getLogger()
    if not root.hasHandlers():
        logging.basicConfig(level=logging.WARNING, format=DEFAULT_LOG_FORMAT)
    for handler in root.handlers:
        handler.setLevel(logging.WARNING)

    if not logger.hasHandlers():
        stdout_handler = logging.StreamHandler(sys.stdout)
        stdout_handler.setLevel(logging.DEBUG)
        stdout_handler.addFilter(lambda record: record.levelno < logging.WARNING)
        stdout_handler.setFormatter(logging.Formatter(fmt))
        logger.addHandler(stdout_handler)

    if filename:
        register_file_handler(logger, filename, level, fmt)

    logger.propagate = True
    return logger


class LoggingMixin:
    """Provide a lazily created, class-named logger."""

    @property
    def log(self) -> logging.Logger:
        if not hasattr(self, "_log"):
            self._log = get_logger(f"{type(self).__module__}.{type(self).__name__}")
        return self._log
