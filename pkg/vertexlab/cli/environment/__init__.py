import typer

from vertexlab.base.feature import is_feature_enabled
from vertexlab.cli.environment.show import app as app_show

app = typer.Typer()

if is_feature_enabled("VERTEXLAB_FF_CLI_ENV_SHOW"):
    app.add_typer(app_show)
