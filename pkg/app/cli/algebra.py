# app/cli/algebra.py
"""Computation in H_{q,kappa,t}: mul, laws, graded."""

import logging
from pathlib import Path
from typing import Optional

import typer
from rich.markup import escape

from app.cli.common import console, load_problem, run, table, verdict_code, verdict_text
from app.schemas.reports import CheckScope, DeformationLawReport, GradedDimensionReport, MultiplyReport
from app.services.deform.deform_service import deform_service
from app.services.problem import parse_element
from app.utils.error_handling import EXIT_OK

logger = logging.getLogger(__name__)

FILE = typer.Argument(..., exists=True, dir_okay=False, help="Problem file")
CAP = typer.Option(None, "--cap", min=1, help="Group closure cap")


def _render_product(report: MultiplyReport) -> None:
    console.print(escape(f"({report.left}) * ({report.right}) = {report.product}"))
    out = table("t-expansion", "t^k", "coefficient")
    for term in report.expansion:
        out.add_row(str(term.t_power), escape(term.element))
    console.print(out)


def mul(
    ctx: typer.Context,
    file: Path = FILE,
    left: str = typer.Argument(..., help="Left factor, e.g. 'v2*v1'"),
    right: str = typer.Argument(..., help="Right factor"),
    tcap: Optional[int] = typer.Option(None, "--tcap", min=0, help="Highest t-power listed"),
    cap: Optional[int] = CAP,
) -> None:
    """
    Multiply two elements of H_{q,kappa,t} and print the t-expansion.
    """
    def action():
        problem = load_problem(file, cap)
        x = parse_element(left, problem)
        y = parse_element(right, problem)
        report = deform_service.multiply(x, y, problem.kappa, problem.group, problem.q, tcap)
        return report, EXIT_OK

    run(ctx, "mul", action, _render_product)


def _render_laws(report: DeformationLawReport) -> None:
    console.print(
        f"deformation laws up to degree {report.degree_cap} ({report.scope.value} decorations): "
        f"{verdict_text(report.passed)} ({report.triples_checked} triples)"
    )
    if report.failure is not None:
        failure = report.failure
        console.print(escape(f"  {failure.law.value} fails at {', '.join(failure.triple)}: {failure.detail}"))


def laws(
    ctx: typer.Context,
    file: Path = FILE,
    degree_cap: Optional[int] = typer.Option(None, "--degree-cap", min=0, help="Total degree of checked triples"),
    generators_only: bool = typer.Option(
        False, "--generators-only", help="Decorate by e and the generators instead of every group element"
    ),
    cap: Optional[int] = CAP,
) -> None:
    """
    Check that H_{q,kappa,t} is a graded deformation of S_q(V) x| G.
    """
    def action():
        problem = load_problem(file, cap)
        scope = CheckScope.GENERATORS if generators_only else CheckScope.ALL
        report = deform_service.laws(problem.kappa, problem.group, problem.q, degree_cap, scope)
        return report, verdict_code(report.passed)

    run(ctx, "laws", action, _render_laws)


def _render_graded(report: GradedDimensionReport) -> None:
    out = table(f"graded dimensions up to degree {report.cap}", "degree", "expected", "actual")
    for row in report.dimensions:
        out.add_row(str(row.degree), str(row.expected), str(row.actual))
    console.print(out)
    console.print(f"verdict: {verdict_text(report.passed)}")


def graded(
    ctx: typer.Context,
    file: Path = FILE,
    degree: Optional[int] = typer.Option(None, "--degree", min=0, help="Highest filtration degree"),
    cap: Optional[int] = CAP,
) -> None:
    """
    Compare the filtered pieces of H with those of S_q(V) x| G.
    """
    def action():
        problem = load_problem(file, cap)
        report = deform_service.graded_dimensions(problem.kappa, problem.group, problem.q, degree)
        return report, verdict_code(report.passed)

    run(ctx, "graded", action, _render_graded)
