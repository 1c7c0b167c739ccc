import typer

from app.cli import algebra, families, problem


def register_commands(cli: typer.Typer) -> None:
    """Attach every command to the application."""
    cli.command("check")(problem.check)
    cli.command("cocycles")(problem.cocycles)
    cli.command("pbw")(problem.pbw)
    cli.command("classify")(families.classify)
    cli.command("diag-hh")(families.diag_hh)
    cli.command("bb")(families.bb)
    cli.command("mul")(algebra.mul)
    cli.command("laws")(algebra.laws)
    cli.command("graded")(algebra.graded)
