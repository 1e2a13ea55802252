import typer

from vertexlab.cli.roots.classify import app as app_classify
from vertexlab.cli.roots.close import app as app_close
from vertexlab.cli.roots.ears import app as app_ears
from vertexlab.cli.roots.support import app as app_support

app = typer.Typer()

app.add_typer(app_close)
app.add_typer(app_classify)
app.add_typer(app_support)
app.add_typer(app_ears)
