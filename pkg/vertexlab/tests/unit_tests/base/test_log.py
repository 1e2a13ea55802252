import logging
import pathlib
import re
import uuid
from time import strftime

import pytest
from _pytest.monkeypatch import MonkeyPatch

from vertexlab.base.env import ENV_VERTEXLAB_LOG_LEVEL
from vertexlab.base.log import LoggingMixin, get_logger, parse_log_level_name, register_file_handler


@pytest.fixture
def log(request: pytest.FixtureRequest) -> logging.Logger:
    """A logger private to the requesting test."""
    return get_logger(f"{request.node.name}-{uuid.uuid4().hex}", logging.DEBUG)


@pytest.mark.parametrize(
    ("name", "expected"),
    [
        ("debug", logging.DEBUG),
        (" Info ", logging.INFO),
        ("WARNING", logging.WARNING),
        (logging.ERROR, logging.ERROR),
    ],
)
def test_parse_log_level_name(name: str | int, expected: int) -> None:
    """Verify level names are parsed case-insensitively and ints pass through."""
    assert parse_log_level_name(name) == expected


def test_parse_log_level_name_unknown() -> None:
    """Verify an unknown level name is rejected."""
    with pytest.raises(ValueError, match="Unknown log level"):
        parse_log_level_name("chatty")


def test_level_from_environment(
    request: pytest.FixtureRequest,
    monkeypatch: MonkeyPatch,
) -> None:
    """Verify the default level is read from the environment."""
    monkeypatch.setenv(ENV_VERTEXLAB_LOG_LEVEL, "ERROR")

    logger = get_logger(f"{request.node.name}-{uuid.uuid4().hex}")

    assert logger.level == logging.ERROR


@pytest.mark.parametrize("level", [logging.DEBUG, logging.INFO, logging.WARNING])
def test_file_handler_levels(
    request: pytest.FixtureRequest,
    level: int,
    tmp_path: pathlib.Path,
) -> None:
    """Verify messages at or above the level reach the file and others do not."""
    logger_name = f"{request.node.name}-{level}"
    filename = tmp_path / f"{logger_name}.log"
    logger = get_logger(logger_name, level, filename=filename)

    funcs = {
        logging.DEBUG: logger.debug,
        logging.INFO: logger.info,
        logging.WARNING: logger.warning,
        logging.ERROR: logger.error,
    }
    today = strftime("%Y\\-%m\\-%d")
    for msg_level, log_fn in funcs.items():
        msg = uuid.uuid4().hex
        log_fn(msg)
        content = filename.read_text()
        if msg_level >= level:
            level_name = logging.getLevelName(msg_level)
            pattern = rf"{today} \d*:\d*:\d*,\d* \[{level_name}\] - .*:\d* - {msg}"
            assert re.findall(pattern, content)
        else:
            assert msg not in content


def test_filehandler_no_dupes(
    request: pytest.FixtureRequest,
    tmp_path: pathlib.Path,
) -> None:
    """Verify repeated requests for a logger attach the file handler once."""
    logger_name = request.node.name
    filename = tmp_path / f"{logger_name}.log"

    for _ in range(4):
        logger = get_logger(logger_name, logging.INFO, filename=filename)

    msg = uuid.uuid4().hex
    logger.info(msg)

    assert filename.read_text().count(msg) == 1


@pytest.mark.parametrize("filepath", ["", " "])
def test_register_fh_no_filename(log: logging.Logger, filepath: str) -> None:
    """Verify that no handler is added for a blank file name."""
    initial_count = len(log.handlers)

    with pytest.raises(ValueError):
        register_file_handler(log, filepath, logging.DEBUG, "%(msg)s")

    assert len(log.handlers) == initial_count


def test_register_fh_dir_not_exist(log: logging.Logger, tmp_path: pathlib.Path) -> None:
    """Verify that missing parent directories are created."""
    filepath = tmp_path / "nested" / "deeper" / "vertexlab.log"

    handler = register_file_handler(log, filepath, logging.DEBUG, "%(msg)s")

    assert handler in log.handlers
    assert filepath.parent.exists()


def test_logging_mixin() -> None:
    """Verify the mixin creates one logger named after the class."""

    class Worker(LoggingMixin):
        pass

    worker = Worker()

    assert worker.log is worker.log
    assert worker.log.name.endswith(".Worker")
