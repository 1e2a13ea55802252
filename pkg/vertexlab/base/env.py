import os
import sys
import types
import typing as t
from dataclasses import dataclass


@dataclass(slots=True)
class EnvVar:
    """Metadata attached to a constant naming an environment variable."""

    description: str
    """Plain-text description of the setting."""
    group: str
    """Display group of the setting."""
    default: str = ""
    """Value used when nothing else supplies one."""
    default_factory: t.Callable[["EnvVar"], str | None] | None = None
    """Callable producing a run-time default."""
    indirect_var: str = ""
    """A second variable consulted when the primary variable is unset."""


@dataclass(slots=True)
class EnvItem(EnvVar):
    """An `EnvVar` bound to its variable name, able to resolve its value."""

    name: str = ""
    """The environment variable name."""

    @property
    def value(self) -> str:
        if (env_value := os.getenv(self.name)) is not None:
            return env_value

        if self.default_factory and (generated := self.default_factory(self)):
            return generated

        if self.indirect_var and (indirect_value := os.getenv(self.indirect_var, "")):
            return indirect_value

        return self.default

    @classmethod
    def from_env_var(cls, env_var: EnvVar, name: str) -> "EnvItem":
        return EnvItem(
            env_var.description,
            env_var.group,
            env_var.default,
            env_var.default_factory,
            env_var.indirect_var,
            name,
        )


_GROUP_ENGINE: t.Final[str] = "Engine Configuration"
_GROUP_OUTPUT: t.Final[str] = "Output Configuration"
_GROUP_UNK: t.Final[str] = "Uncategorized Configuration"

FLAG_ON: t.Final[str] = "1"
"""Value indicating a flag is enabled."""

FLAG_OFF: t.Final[str] = "0"
"""Value indicating a flag is disabled."""


def threads_factory() -> str:
    """Return the number of processors available on the current machine."""
    return str(os.cpu_count() or 1)


ENV_VERTEXLAB_LOG_LEVEL: t.Annotated[
    t.Literal["VERTEXLAB_LOG_LEVEL"],
    EnvVar(
        "Logging level for terminal messages. Options: DEBUG, INFO, WARNING, ERROR, CRITICAL. Defaults to WARNING so JSON written to stdout stays parseable.",
        _GROUP_OUTPUT,
        default="WARNING",
    ),
] = "VERTEXLAB_LOG_LEVEL"
"""Logging level for terminal messages."""

ENV_VERTEXLAB_THREADS: t.Annotated[
    t.Literal["VERTEXLAB_THREADS"],
    EnvVar(
        "Maximum number of worker threads used by verification suites. Dynamic default ``os.cpu_count()``",
        _GROUP_ENGINE,
        default="1",
        default_factory=lambda _: threads_factory(),
    ),
] = "VERTEXLAB_THREADS"
"""Maximum number of worker threads used by verification suites."""

ENV_VERTEXLAB_SEED: t.Annotated[
    t.Literal["VERTEXLAB_SEED"],
    EnvVar(
        "Seed for randomized checks when no `--seed` option is given.",
        _GROUP_ENGINE,
        default="0",
    ),
] = "VERTEXLAB_SEED"
"""Seed for randomized checks when no `--seed` option is given."""

ENV_VERTEXLAB_MEMO: t.Annotated[
    t.Literal["VERTEXLAB_MEMO"],
    EnvVar(
        "Set to `0` to disable memoization of vertex-algebra products.",
        _GROUP_ENGINE,
        default=FLAG_ON,
    ),
] = "VERTEXLAB_MEMO"
"""Set to `0` to disable memoization of vertex-algebra products."""


def get_env_item(var_name: str, prefix: str = "ENV_") -> EnvItem:
    """Retrieve the metadata for an environment variable constant.

    Parameters
    ----------
    var_name: str
        The environment variable name (e.g. "VERTEXLAB_THREADS")
    prefix: str
        The prefix of the module constant declaring the variable

    Returns
    -------
    EnvItem
        The metadata associated with the environment variable

    Raises
    ------
    ValueError
        If no declaration exists for the variable
    """
    constant_mods = [__name__, "vertexlab.base.feature"]
    constant_name = f"{prefix}{var_name}"

    for module_name in constant_mods:
        if module_name not in sys.modules:
            __import__(module_name)
        hints = t.get_type_hints(sys.modules[module_name], include_extras=True)

        if hint := hints.get(constant_name, None):
            metadata = getattr(hint, "__metadata__", None)
            if metadata and isinstance(metadata[0], EnvVar):
                return EnvItem.from_env_var(metadata[0], var_name)

            return EnvItem(
                description="unknown",
                group=_GROUP_UNK,
                default="unknown",
                name=var_name,
            )

    msg = f"No environment variable metadata found for: {constant_name}"
    raise ValueError(msg)


def get_int_setting(var_name: str, minimum: int = 0) -> int:
    """Resolve an integer-valued setting, clamped below by `minimum`.

    Raises
    ------
    ValueError
        If the configured value is not an integer
    """
    raw = get_env_item(var_name).value
    try:
        value = int(raw)
    except ValueError as ex:
        msg = f"Setting {var_name} must be an integer, got `{raw}`"
        raise ValueError(msg) from ex
    return max(value, minimum)


def discover_env_vars(
    modules: list[types.ModuleType],
    prefix: str = "ENV_",
) -> list[EnvItem]:
    """Locate all constants in the modules that declare environment variables."""
    items: list[EnvItem] = []
    for module in modules:
        hints = t.get_type_hints(module, include_extras=True)

        for name, hint in hints.items():
            if not name.startswith(prefix):
                continue

            # the constant's value is the variable name; feature flags carry a longer prefix
            var_name = str(getattr(module, name, name.removeprefix(prefix)))
            metadata = getattr(hint, "__metadata__", None)
            if metadata and isinstance(metadata[0], EnvVar):
                items.append(EnvItem.from_env_var(metadata[0], var_name))
            elif not metadata:
                items.append(
                    EnvItem(
                        description="unknown",
                        group=_GROUP_UNK,
                        default="unknown",
                        name=var_name,
                    ),
                )

    return items
