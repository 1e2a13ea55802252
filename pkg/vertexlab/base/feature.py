import os
import typing as t

from vertexlab.base.env import FLAG_OFF, FLAG_ON, EnvVar

FF_PREFIX: t.Literal["VERTEXLAB_FF_"] = "VERTEXLAB_FF_"
"""Conventional prefix of environment variables for feature flags."""

_GROUP_FF: t.Final[str] = "Feature Flags"
"""Group name for feature flag environment variables in documentation."""

ENV_FF_DEVELOPER_MODE: t.Annotated[
    t.Literal["VERTEXLAB_FF_DEVELOPER_MODE"],
    EnvVar(
        "Enable all feature flags at once.",
        _GROUP_FF,
        default=FLAG_OFF,
    ),
] = "VERTEXLAB_FF_DEVELOPER_MODE"
"""Enable all feature flags at once."""

ENV_FF_CLI_ENV_SHOW: t.Annotated[
    t.Literal["VERTEXLAB_FF_CLI_ENV_SHOW"],
    EnvVar(
        "Enable the CLI command that displays the environment configuration.",
        _GROUP_FF,
        default=FLAG_OFF,
    ),
] = "VERTEXLAB_FF_CLI_ENV_SHOW"
"""Enable the CLI command that displays the environment configuration."""


def is_feature_enabled(flag: str) -> bool:
    """Determine if the environment variable for a feature is set.

    Parameters
    ----------
    flag : str
        The feature flag name, with or without the `VERTEXLAB_FF_` prefix.
        Any enabled leading segment of the name enables the flag, so
        `VERTEXLAB_FF_CLI=1` turns on every `VERTEXLAB_FF_CLI_*` feature.
    """
    if os.getenv(ENV_FF_DEVELOPER_MODE, FLAG_OFF) == FLAG_ON:
        return True

    if not flag.startswith(FF_PREFIX):
        flag = f"{FF_PREFIX}{flag}"

    prefix_len = len(FF_PREFIX.rstrip("_").split("_"))
    flag_parts = flag.split("_")
    for i in range(prefix_len + 1, len(flag_parts)):
        if os.getenv("_".join(flag_parts[:i]), FLAG_OFF) == FLAG_ON:
            return True

    return os.getenv(flag, FLAG_OFF) == FLAG_ON
