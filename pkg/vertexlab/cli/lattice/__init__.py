import typer

from vertexlab.cli.lattice.check import app as app_check

app = typer.Typer()

app.add_typer(app_check)
