import typer

from vertexlab.cli.verify.axioms import app as app_axioms
from vertexlab.cli.verify.embedding import app as app_embedding
from vertexlab.cli.verify.identities import app as app_identities

app = typer.Typer()

app.add_typer(app_axioms)
app.add_typer(app_embedding)
app.add_typer(app_identities)
