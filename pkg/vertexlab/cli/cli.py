import typer
from rich import print  # noqa: A004

from vertexlab.cli.bfc import app as app_bfc
from vertexlab.cli.common import EXIT_USAGE
from vertexlab.cli.environment import app as app_env
from vertexlab.cli.lattice import app as app_lattice
from vertexlab.cli.product import app as app_product
from vertexlab.cli.reconstruct import app as app_reconstruct
from vertexlab.cli.roots import app as app_roots
from vertexlab.cli.verify import app as app_verify
from vertexlab.cli.version import common_callback
from vertexlab.cli.weights import app as app_weights


def build_app() -> typer.Typer:
    """Assemble the vertexlab command tree."""
    app = typer.Typer(callback=common_callback, no_args_is_help=True)

    for command_app in (app_product, app_weights, app_reconstruct):
        app.add_typer(command_app)

    groups: list[tuple[typer.Typer, str]] = [
        (app_lattice, "lattice"),
        (app_verify, "verify"),
        (app_bfc, "bfc"),
        (app_roots, "roots"),
        (app_env, "env"),
    ]
    for command_app, command_name in groups:
        if command_app.registered_groups or command_app.registered_commands:
            # empty groups stay hidden
            app.add_typer(command_app, name=command_name, callback=common_callback)
    return app


def main() -> None:
    """Main entrypoint for the vertexlab CLI."""
    try:
        build_app()()
    except Exception as ex:
        print(f"An error occurred while handling request: {ex}")
        raise SystemExit(EXIT_USAGE) from ex


if __name__ == "__main__":
    main()
