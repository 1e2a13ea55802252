import typer

from vertexlab.cli.bfc.verify import app as app_verify

app = typer.Typer()

app.add_typer(app_verify)
