# app/cli/common.py

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, List, Optional, Tuple

import typer
from pydantic import BaseModel
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from app.schemas.reports import KappaModel
from app.services.problem import ProblemContext, build_context, read_problem
from app.utils.cache import get_cache_stats
from app.utils.error_handling import EXIT_MATH_FAILURE, EXIT_OK, handle_cli_error
from app.utils.response_formatter import response_formatter

logger = logging.getLogger(__name__)

console = Console(highlight=False, soft_wrap=True)
err_console = Console(stderr=True, highlight=False, soft_wrap=True)


@dataclass
class CliState:
    json_output: bool = False


def state(ctx: typer.Context) -> CliState:
    return ctx.obj if isinstance(ctx.obj, CliState) else CliState()


def load_problem(path: Path, cap: Optional[int] = None) -> ProblemContext:
    logger.info(f"Loading problem file {path}")
    return build_context(read_problem(path), cap)


def verdict_code(passed: bool) -> int:
    return EXIT_OK if passed else EXIT_MATH_FAILURE


def verdict_text(passed: Optional[bool]) -> str:
    if passed is None:
        return "-"
    return "[green]pass[/green]" if passed else "[red]fail[/red]"


def table(title: str, *columns: str) -> Table:
    out = Table(title=title, title_justify="left", show_lines=False)
    for column in columns:
        out.add_column(column)
    return out


def print_kappa_basis(kappas: List[KappaModel]) -> None:
    """Table of the basis maps, then each map in problem-file form."""
    if not kappas:
        return
    out = table("kappa basis", "#", "i", "j", "kappa(v_i, v_j)")
    for k, kappa in enumerate(kappas, start=1):
        for entry in kappa.entries:
            out.add_row(str(k), str(entry.i), str(entry.j), escape(entry.value))
    console.print(out)
    for k, kappa in enumerate(kappas, start=1):
        console.print(f"# kappa {k}")
        for line in kappa.lines:
            console.print(escape(line))


def run(
    ctx: typer.Context,
    command: str,
    action: Callable[[], Tuple[BaseModel, int]],
    render: Callable[[BaseModel], None],
) -> None:
    """
    Run a command body, print its report and exit with its code.

    `action` returns the report and the exit code; any exception is mapped
    through handle_cli_error.
    """
    json_output = state(ctx).json_output
    try:
        report, code = action()
    except Exception as e:
        code, envelope = handle_cli_error(e)
        if json_output:
            typer.echo(response_formatter.dumps(envelope))
        else:
            err_console.print(f"[red]error:[/red] {escape(envelope['error']['message'])}")
        raise typer.Exit(code)
    logger.debug(f"{command} finished with exit code {code}, cache {get_cache_stats()}")
    if json_output:
        envelope = response_formatter.success(report, metadata={"command": command, "exit_code": code})
        typer.echo(response_formatter.dumps(envelope))
    else:
        render(report)
    raise typer.Exit(code)
