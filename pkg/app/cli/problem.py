# app/cli/problem.py
"""Commands that read a problem file: check, cocycles, pbw."""

import logging
from pathlib import Path
from typing import Optional

import typer
from rich.markup import escape

from app.cli.common import console, load_problem, print_kappa_basis, run, table, verdict_code, verdict_text
from app.schemas.reports import CheckReport, CheckScope, CocycleReport, PbwReport
from app.services.group.group_service import group_service
from app.services.koszul.koszul_service import koszul_service
from app.services.pbw.pbw_service import pbw_service
from app.utils.error_handling import EXIT_OK

logger = logging.getLogger(__name__)

FILE = typer.Argument(..., exists=True, dir_okay=False, readable=True, help="Problem file")
CAP = typer.Option(None, "--cap", min=1, help="Group closure cap")


def _render_check(report: CheckReport) -> None:
    out = table(f"action checks (|G|={report.group_order}, n={report.dimension})",
                "check", "verdict", "elements", "violations")
    for part in (report.q_action, report.exterior_extension):
        out.add_row(part.check.value, verdict_text(part.passed), str(part.elements_checked), str(len(part.violations)))
    console.print(out)
    for part in (report.q_action, report.exterior_extension):
        for v in part.violations[:10]:
            console.print(f"  {part.check.value}: {escape(v.element)} at {v.indices} -> {escape(v.residual)}")


def check(
    ctx: typer.Context,
    file: Path = FILE,
    all_elements: bool = typer.Option(False, "--all", help="Check every element, not only generators"),
    cap: Optional[int] = CAP,
) -> None:
    """
    Check that the group acts on S_q(V) and that the action extends to Lambda_q(V).
    """
    def action():
        problem = load_problem(file, cap)
        scope = CheckScope.ALL if all_elements else CheckScope.GENERATORS
        report = group_service.check_actions(problem.group, problem.q, scope)
        return report, verdict_code(report.passed)

    run(ctx, "check", action, _render_check)


def _render_cocycles(report: CocycleReport) -> None:
    console.print(
        f"|G| = {report.group_order}, n = {report.dimension}, field Q(z_{report.conductor}), "
        f"{report.classes} classes"
    )
    console.print(f"dimension {report.cocycle_dimension}")
    print_kappa_basis(report.kappas)


def cocycles(
    ctx: typer.Context,
    file: Path = FILE,
    threads: Optional[int] = typer.Option(None, "--threads", min=1, help="Solver worker threads"),
    cap: Optional[int] = CAP,
) -> None:
    """
    Solve for the constant Hochschild 2-cocycles and print an echelon basis.
    """
    def action():
        problem = load_problem(file, cap)
        return koszul_service.report(problem.group, problem.q, threads), EXIT_OK

    run(ctx, "cocycles", action, _render_cocycles)


def _render_pbw(report: PbwReport) -> None:
    out = table("PBW verdict", "check", "verdict", "detail")
    ls_detail = f"{len(report.ls.violations)} violations"
    diamond = report.diamond
    diamond_detail = f"{diamond.overlaps_checked} overlaps"
    if diamond.overlap:
        diamond_detail += f", overlap {diamond.overlap} -> {diamond.residual}"
    elif diamond.conjugation:
        diamond_detail += f", conjugation by {diamond.conjugator} at {diamond.conjugation} -> {diamond.residual}"
    out.add_row("criteria", verdict_text(report.ls.passed), escape(ls_detail))
    out.add_row("rewriting", verdict_text(diamond.passed), escape(diamond_detail))
    console.print(out)
    for v in report.ls.violations[:10]:
        by = f" by {v.conjugator}" if v.conjugator else ""
        console.print(escape(f"  {v.condition.value} at {v.element}{by} {v.witness}: {v.residual}"))


def pbw(ctx: typer.Context, file: Path = FILE, cap: Optional[int] = CAP) -> None:
    """
    Decide the PBW property of kappa; exits 0 only when both checks pass.
    """
    def action():
        problem = load_problem(file, cap)
        report = pbw_service.verdict(problem.kappa, problem.group, problem.q)
        return report, verdict_code(report.passed)

    run(ctx, "pbw", action, _render_pbw)
