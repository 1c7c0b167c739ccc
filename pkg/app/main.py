import logging

import typer

from app.cli import register_commands
from app.cli.common import CliState
from app.core.config import settings

# Configure logging
logging.basicConfig(
    level=getattr(logging, settings.LOG_LEVEL),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)

app = typer.Typer(
    name=settings.PROJECT_NAME,
    help="""
    Exact computations for quantum Drinfeld Hecke algebras.

    Problem files declare a cyclotomic field, a q-tuple, generator matrices
    and kappa; see the README for the grammar. Exit codes: 0 success or pass,
    1 mathematical failure, 2 usage or parse error.
    """,
    no_args_is_help=True,
    add_completion=False,
    pretty_exceptions_enable=False,
)


@app.callback()
def main(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at DEBUG level"),
    json_output: bool = typer.Option(False, "--json", help="Print a machine-readable JSON document"),
) -> None:
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    ctx.obj = CliState(json_output=json_output)
    logger.debug(f"{settings.PROJECT_NAME} ({settings.ENV}) starting")


register_commands(app)


if __name__ == "__main__":
    app()
