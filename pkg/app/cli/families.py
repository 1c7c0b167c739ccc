# app/cli/families.py
"""Classification commands: classify, diag-hh, bb."""

import logging
from enum import Enum
from pathlib import Path
from typing import List, Optional

import typer
from rich.markup import escape

from app.cli.common import console, load_problem, print_kappa_basis, run, table, verdict_code, verdict_text
from app.schemas.families import (
    BazlovBerensteinSpec,
    BraidedCherednikReport,
    ClassificationReport,
    ReflectionGroupSpec,
    Representation,
)
from app.schemas.reports import DiagonalHHReport
from app.services.families.families_service import families_service
from app.utils.error_handling import EXIT_OK, InvalidFamilySpec

logger = logging.getLogger(__name__)


class Family(str, Enum):
    NATURAL = "natural"
    SYMPLECTIC = "symplectic"
    DIAGONAL = "diagonal"


def _render_classification(report: ClassificationReport) -> None:
    out = table(escape(report.family), "field", "value")
    out.add_row("|G|", str(report.group_order))
    out.add_row("n", str(report.dimension))
    out.add_row("dimension", str(report.cocycle_dimension))
    if report.expected_dimension is not None:
        out.add_row("expected", str(report.expected_dimension))
    if report.reference_in_span is not None:
        out.add_row("reference maps", f"{report.reference_maps} ({verdict_text(report.reference_in_span)})")
    console.print(out)
    print_kappa_basis(report.kappas)


def _classification_code(report: ClassificationReport) -> int:
    expected = report.expected_dimension
    agrees = expected is None or expected == report.cocycle_dimension
    return verdict_code(agrees and report.reference_in_span is not False)


def classify(
    ctx: typer.Context,
    family: Family = typer.Option(..., "--family", help="natural, symplectic or diagonal"),
    m: Optional[int] = typer.Option(None, "--m", help="Root-of-unity order"),
    p: int = typer.Option(1, "--p", help="Divisor of m (natural family)"),
    n: Optional[int] = typer.Option(None, "--n", help="Rank"),
    file: Optional[Path] = typer.Option(None, "--file", exists=True, dir_okay=False, help="Problem file (diagonal family)"),
    reference: bool = typer.Option(False, "--reference", help="Check the closed-form maps lie in the solved span"),
    threads: Optional[int] = typer.Option(None, "--threads", min=1, help="Solver worker threads"),
    cap: Optional[int] = typer.Option(None, "--cap", min=1, help="Group closure cap"),
) -> None:
    """
    Classify PBW parameters for G(m, p, n) or for a diagonal action read from --file.
    """
    def action():
        if family == Family.DIAGONAL:
            if file is None:
                raise InvalidFamilySpec("--family diagonal needs --file")
            problem = load_problem(file, cap)
            report = families_service.diagonal_report(problem.group, problem.q, threads)
            return report, verdict_code(report.reference_in_span and report.cocycle_dimension == len(report.kappas))
        if m is None or n is None:
            raise InvalidFamilySpec(f"--family {family.value} needs --m and --n")
        spec = ReflectionGroupSpec(m=m, p=p, n=n, representation=Representation(family.value))
        report = families_service.classify(spec, threads=threads, reference=reference, cap=cap)
        return report, _classification_code(report)

    run(ctx, "classify", action, _render_classification)


def _render_hh(report: DiagonalHHReport) -> None:
    console.print(
        f"HH^{report.cohomological_degree} up to polynomial degree {report.poly_degree_cap}: "
        f"dimension {report.dimension}"
    )


def diag_hh(
    ctx: typer.Context,
    file: Path = typer.Argument(..., exists=True, dir_okay=False, help="Problem file with a diagonal group"),
    degree: int = typer.Option(2, "--degree", min=0, help="Cohomological degree"),
    polycap: int = typer.Option(0, "--polycap", min=0, help="Polynomial degree cap"),
    cap: Optional[int] = typer.Option(None, "--cap", min=1, help="Group closure cap"),
) -> None:
    """
    Dimension of HH^degree(S_q(V) x| G) for a diagonal action, truncated by polynomial degree.
    """
    def action():
        problem = load_problem(file, cap)
        return families_service.diagonal_hh(problem.group, problem.q, degree, polycap), EXIT_OK

    run(ctx, "diag-hh", action, _render_hh)


def _parse_c(values: List[str]) -> dict:
    out = {}
    for item in values:
        key, sep, value = item.partition("=")
        if not sep or not key.strip().lstrip("-").isdigit():
            raise InvalidFamilySpec(f"--c expects k=<scalar>, got '{item}'")
        out[int(key)] = value.strip()
    return out


def _render_braided(report: BraidedCherednikReport) -> None:
    console.print(f"{escape(report.family)}: PBW {verdict_text(report.pbw.passed)}")
    out = table("kappa", "i", "j", "kappa(v_i, v_j)")
    for entry in report.kappa.entries:
        out.add_row(str(entry.i), str(entry.j), escape(entry.value))
    console.print(out)


def bb(
    ctx: typer.Context,
    m: int = typer.Option(..., "--m", help="Even root-of-unity order"),
    n: int = typer.Option(..., "--n", help="Rank, at least 3"),
    subgroup_order: int = typer.Option(1, "--subgroup-order", help="Order of the subgroup C'"),
    c_one: str = typer.Option("0", "--c-one", help="Scalar multiplying the sigma-sum map"),
    c: List[str] = typer.Option([], "--c", help="k=<scalar> for zeta^k in C' (repeatable)"),
    cap: Optional[int] = typer.Option(None, "--cap", min=1, help="Group closure cap"),
) -> None:
    """
    Build a braided Cherednik parameter on the symplectic G(m, 1, n) and check PBW.
    """
    def action():
        spec = BazlovBerensteinSpec(m=m, n=n, subgroup_order=subgroup_order, c_one=c_one, c=_parse_c(c))
        report = families_service.braided_cherednik(spec, cap)
        return report, verdict_code(report.pbw.passed)

    run(ctx, "bb", action, _render_braided)
