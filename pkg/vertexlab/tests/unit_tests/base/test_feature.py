import pytest
from _pytest.monkeypatch import MonkeyPatch

from vertexlab.base.env import FLAG_OFF, FLAG_ON
from vertexlab.base.feature import ENV_FF_CLI_ENV_SHOW, ENV_FF_DEVELOPER_MODE, is_feature_enabled


@pytest.fixture(autouse=True)
def clear_flags(monkeypatch: MonkeyPatch) -> None:
    """Remove any feature flag set in the environment running the tests."""
    for name in (
        ENV_FF_DEVELOPER_MODE,
        ENV_FF_CLI_ENV_SHOW,
        "VERTEXLAB_FF_CLI",
        "VERTEXLAB_FF_CLI_ENV",
    ):
        monkeypatch.delenv(name, raising=False)


def test_feature_disabled_by_default() -> None:
    """Verify that an unset flag is disabled."""
    assert not is_feature_enabled(ENV_FF_CLI_ENV_SHOW)


@pytest.mark.parametrize("flag", [ENV_FF_CLI_ENV_SHOW, "CLI_ENV_SHOW"])
def test_feature_enabled(flag: str, monkeypatch: MonkeyPatch) -> None:
    """Verify a flag is enabled with or without its prefix."""
    monkeypatch.setenv(ENV_FF_CLI_ENV_SHOW, FLAG_ON)

    assert is_feature_enabled(flag)


@pytest.mark.parametrize("parent", ["VERTEXLAB_FF_CLI", "VERTEXLAB_FF_CLI_ENV"])
def test_feature_enabled_by_parent(parent: str, monkeypatch: MonkeyPatch) -> None:
    """Verify that enabling a leading segment enables every nested flag."""
    monkeypatch.setenv(parent, FLAG_ON)

    assert is_feature_enabled(ENV_FF_CLI_ENV_SHOW)


def test_feature_explicitly_off(monkeypatch: MonkeyPatch) -> None:
    """Verify that only the enabled value turns a flag on."""
    monkeypatch.setenv(ENV_FF_CLI_ENV_SHOW, FLAG_OFF)

    assert not is_feature_enabled(ENV_FF_CLI_ENV_SHOW)


def test_developer_mode(monkeypatch: MonkeyPatch) -> None:
    """Verify developer mode enables all flags at once."""
    monkeypatch.setenv(ENV_FF_DEVELOPER_MODE, FLAG_ON)

    assert is_feature_enabled("ANYTHING_AT_ALL")
