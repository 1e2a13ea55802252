import typing as t
from collections import defaultdict
from enum import StrEnum, auto

import typer
from rich import print  # noqa: A004

from vertexlab.base import env, feature
from vertexlab.base.env import discover_env_vars

if t.TYPE_CHECKING:
    from vertexlab.base.env import EnvItem

app = typer.Typer()


class DisplayFormat(StrEnum):
    """Supported display formats."""

    INTERACTIVE = auto()
    """Readable listing with defaults and descriptions."""
    EXPORT = auto()
    """Shell `export` statements."""


def _group(items: list["EnvItem"]) -> dict[str, list["EnvItem"]]:
    groups: dict[str, list[EnvItem]] = defaultdict(list)
    for item in sorted(items, key=lambda x: (x.group, x.name)):
        groups[item.group].append(item)
    return groups


def _interactive(groups: dict[str, list["EnvItem"]]) -> None:
    for name, items in groups.items():
        print(f"[underline]{name}[/underline]")
        for item in items:
            colour = "bold red" if item.value != item.default else "green"
            value = item.value or "<not-set>"
            print(
                f"- {item.name}: [{colour}]{value}[/{colour}] "
                f"(default: [blue]{item.default or '<none>'}[/blue]), "
                f"[yellow italic]{item.description}[/yellow italic]"
            )
        print()


def _export(groups: dict[str, list["EnvItem"]]) -> None:
    for name, items in groups.items():
        typer.echo(f"# {name}")
        for item in items:
            typer.echo(f"# {item.description}")
            typer.echo(f'export {item.name}="{item.value}"')
        typer.echo()


@app.command()
def show(
    group: str = "all",
    display: DisplayFormat = DisplayFormat.INTERACTIVE,
) -> None:
    """Display the active engine settings and feature flags."""
    items = discover_env_vars([env, feature])
    if group != "all":
        items = [item for item in items if group.lower() in item.group.lower()]

    if not items:
        print(f"[bold red]No environment variables found for group '{group}'[/bold red]")
        return

    if display == DisplayFormat.EXPORT:
        _export(_group(items))
    else:
        _interactive(_group(items))
