"""
Text and JSON rendering of reports.

JSON is printed verbatim from the report models; text goes through rich and
may change between versions.
"""

from typing import Callable, List

import typer
from pydantic import BaseModel
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from cli.options import OutputFormat
from geometry.registry import RegistryEntry
from matroid.models import PartitionDocument
from terracini.models import (
    DefectReport,
    GoldenReport,
    JoinReport,
    MatroidReport,
    PartitionReport,
    ScanReport,
    SubsetRankReport,
    UnionCheckReport,
)


def emit(console: Console, report: BaseModel, output: OutputFormat, render: Callable[[Console, BaseModel], None]):
    if output == OutputFormat.JSON:
        typer.echo(report.model_dump_json(indent=2))
    else:
        render(console, report)


def _labels(labels: List[str]) -> str:
    return "{" + ", ".join(labels) + "}" if labels else "none"


def defect_lines(report: DefectReport) -> str:
    verdict = "[red]defective[/red]" if report.defective else "[green]not defective[/green]"
    return (
        f"[bold]Dimension:[/bold] {report.actual_dim}\n"
        f"[bold]Expected:[/bold] {report.expected_dim}\n"
        f"[bold]Defect:[/bold] {report.defect} ({verdict})"
    )


def render_matroid(console: Console, report: MatroidReport):
    count = report.base_count if report.base_count is not None else "not enumerated"
    console.print(Panel(
        f"[bold]Ground set:[/bold] {len(report.ground)} elements\n"
        f"[bold]Rank:[/bold] {report.rank}\n"
        f"[bold]Bases:[/bold] {count}\n"
        f"[bold]Loops:[/bold] {_labels(report.loops)}\n"
        f"[bold]Coloops:[/bold] {_labels(report.coloops)}\n"
        f"[bold]Provenance:[/bold] {report.provenance}",
        title=f"[bold]Matroid[/bold] {report.name or ''}",
        border_style="cyan"
    ))
    if report.bases:
        for basis in report.bases:
            console.print(f"  {_labels(basis)}")


def render_join(console: Console, report: JoinReport):
    render_matroid(console, report.matroid)
    console.print(Panel(defect_lines(report.defect), title=f"[bold]Join of {report.s}[/bold]", border_style="blue"))


def render_defect(console: Console, report: DefectReport):
    console.print(Panel(defect_lines(report), title="[bold]Defect[/bold]", border_style="blue"))


def render_union_check(console: Console, report: UnionCheckReport):
    if report.is_terracini_union:
        verdict = "[bold green]Terracini union[/bold green]"
    else:
        verdict = "[bold red]not a Terracini union[/bold red]"
    console.print(Panel(
        f"{verdict}\n"
        f"[bold]Union:[/bold] rank {report.union_rank}, {report.union_base_count} bases\n"
        f"[bold]Join:[/bold] rank {report.join_rank}, {report.join_base_count} bases\n"
        f"[bold]Missing bases:[/bold] {len(report.missing_bases)}",
        title="[bold]Union check[/bold]",
        border_style="green" if report.is_terracini_union else "red"
    ))
    if report.rank_gap:
        console.print(f"[yellow]The union has rank {report.rank_gap} above the join.[/yellow]")
    if report.missing_bases:
        table = Table(title="Missing bases")
        table.add_column("Basis")
        table.add_column("Projected dim", justify="right")
        table.add_column("Expected", justify="right")
        table.add_column("Defect", justify="right")
        for missing in report.missing_bases:
            table.add_row(
                _labels(missing.subset),
                str(missing.witness.actual_dim),
                str(missing.witness.expected_dim),
                str(missing.witness.defect),
            )
        console.print(table)


def render_subset_rank(console: Console, report: SubsetRankReport):
    body = f"[bold]Subset:[/bold] {_labels(report.subset)}\n[bold]Rank:[/bold] {report.rank}"
    if report.defect is not None:
        body += "\n" + defect_lines(report.defect)
    console.print(Panel(body, title="[bold]Subset rank[/bold]", border_style="cyan"))


def render_partition(console: Console, document: PartitionDocument):
    if document.independent:
        parts = "\n".join(f"  part {i + 1}: {_labels(p)}" for i, p in enumerate(document.parts))
        console.print(Panel(
            f"[bold green]independent in the union[/bold green]\n{parts}",
            title=f"[bold]Partition of {_labels(document.subset)}[/bold]",
            border_style="green"
        ))
    else:
        console.print(Panel(
            f"[bold red]dependent in the union[/bold red] (union rank {document.union_rank})",
            title=f"[bold]Partition of {_labels(document.subset)}[/bold]",
            border_style="red"
        ))


def render_partition_report(console: Console, report: PartitionReport):
    console.print(f"[bold green]All {report.join_base_count} join bases partition into summand-independent sets[/bold green]")
    table = Table()
    table.add_column("Basis")
    table.add_column("Parts")
    for certificate in report.certificates:
        table.add_row(_labels(certificate.subset), " | ".join(_labels(p) for p in certificate.parts))
    console.print(table)


def render_scan(console: Console, report: ScanReport):
    console.print(f"[bold]{report.match_count}[/bold] translates of a {report.pattern_size}-point pattern")
    if not report.matches:
        return
    table = Table()
    table.add_column("Offset")
    table.add_column("Coordinates")
    table.add_column("Missing basis", justify="center")
    for match in report.matches:
        verdict = {True: "[red]yes[/red]", False: "[green]no[/green]", None: "-"}[match.missing_basis]
        table.add_row(str(tuple(match.offset)), _labels(match.subset), verdict)
    console.print(table)


def render_golden(console: Console, report: GoldenReport):
    table = Table(title=f"{report.name}" + (" (symbolic recheck)" if report.rechecked_symbolically else ""))
    table.add_column("Check")
    table.add_column("Expected", max_width=40)
    table.add_column("Actual", max_width=40)
    table.add_column("", justify="center")
    for check in report.checks:
        mark = "[green]pass[/green]" if check.passed else "[bold red]FAIL[/bold red]"
        table.add_row(check.label, str(check.expected), str(check.actual), mark)
    console.print(table)


def render_builtins(console: Console, entries: List[RegistryEntry]):
    table = Table(title="Builtin varieties")
    table.add_column("Name", style="cyan")
    table.add_column("Description")
    for entry in entries:
        table.add_row(entry.name, entry.description)
    console.print(table)
