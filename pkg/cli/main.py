"""
CLI tool for algebraic matroids of varieties and their joins.
"""

from contextlib import contextmanager
from pathlib import Path
from typing import List, Optional

import typer
from pydantic import ValidationError
from rich.console import Console

from cli.options import OutputFormat, RunConfig, build_service, parse_params, parse_subset, resolve_output
from config.settings import get_settings
from core.exceptions import EnumerationCapExceeded, SamplingAnomaly, SpecError
from core.logging import configure_logging

app = typer.Typer(
    name="terracini",
    help="Algebraic matroids of varieties, joins and secants, and the Terracini-union check"
)
console = Console()
err_console = Console(stderr=True)

EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_NOT_UNION = 3
EXIT_ANOMALY = 4
EXIT_CAP = 5


def _version_callback(value: bool):
    if value:
        settings = get_settings()
        console.print(f"{settings.app_name} {settings.app_version}")
        raise typer.Exit()


@app.callback()
def _root(
    version: bool = typer.Option(
        False, "--version", callback=_version_callback, is_eager=True, help="Show the version and exit"
    )
):
    pass


# Shared options

def _input_argument():
    return typer.Argument(None, help="Spec JSON file")


def _builtin_option():
    return typer.Option(None, "--builtin", "-b", help="Builtin variety name (see `builtins`)")


def _param_option():
    return typer.Option(None, "--param", "-p", help="Builtin parameter as key=value (repeatable)")


def _seed_option():
    return typer.Option(None, "--seed", help="Sampling seed")


def _trials_option():
    return typer.Option(None, "--trials", help="Number of sampled points per rank")


def _prime_option():
    return typer.Option(None, "--prime", help="Prime modulus for sampled ranks")


def _verify_option():
    return typer.Option(False, "--verify-symbolic", help="Re-check dependent sets by symbolic rank")


def _workers_option():
    return typer.Option(None, "--workers", "-w", help="Worker threads for union checks")


def _cap_option():
    return typer.Option(None, "--cap", help="Largest ground set whose bases may be enumerated")


def _output_option():
    return typer.Option(None, "--output", "-o", help="Output format (default: settings.output_format)")


def _verbose_option():
    return typer.Option(False, "--verbose", "-v", help="Debug logging")


@contextmanager
def _errors():
    """Map library errors to exit codes."""
    try:
        yield
    except typer.Exit:
        raise
    except EnumerationCapExceeded as e:
        err_console.print(f"[bold red]Error: {e}[/bold red]")
        raise typer.Exit(code=EXIT_CAP)
    except SamplingAnomaly as e:
        err_console.print(f"[bold red]Sampling anomaly: {e}[/bold red]")
        raise typer.Exit(code=EXIT_ANOMALY)
    except (SpecError, ValidationError) as e:
        err_console.print(f"[bold red]Error: {e}[/bold red]")
        raise typer.Exit(code=EXIT_USAGE)


def _run_config(verbose: bool, **values) -> RunConfig:
    configure_logging("DEBUG" if verbose else None)
    values["params"] = parse_params(values.get("params"))
    values["subset"] = parse_subset(values.get("subset"))
    return RunConfig(**values)


@app.command()
def matroid(
    input_path: Optional[Path] = _input_argument(),
    builtin: Optional[str] = _builtin_option(),
    param: Optional[List[str]] = _param_option(),
    bases: bool = typer.Option(False, "--bases", help="List every basis"),
    document: bool = typer.Option(
        False, "--document", help="Print the JSON matroid document (bases with --bases, else provenance)"
    ),
    seed: Optional[int] = _seed_option(),
    trials: Optional[int] = _trials_option(),
    prime: Optional[int] = _prime_option(),
    verify_symbolic: bool = _verify_option(),
    cap: Optional[int] = _cap_option(),
    output: Optional[OutputFormat] = _output_option(),
    verbose: bool = _verbose_option()
):
    """
    Rank, bases, loops and coloops of the algebraic matroid.
    """
    from cli.render import emit, render_matroid

    with _errors():
        cfg = _run_config(
            verbose, input_path=input_path, builtin=builtin, params=param, bases=bases, seed=seed,
            trials=trials, prime=prime, verify_symbolic=verify_symbolic, cap=cap, output=output
        )
        service = cfg.service()
        spec = cfg.load_spec()
        m = service.algebraic_matroid(spec)
        if document:
            typer.echo(m.to_document(with_bases=cfg.bases, cap=service.cfg.enumeration_cap).model_dump_json(indent=2))
            return
        with_bases = cfg.bases or m.size <= service.cfg.enumeration_cap
        report = service.matroid_report(m, getattr(spec, "name", None), with_bases=with_bases)
        if not cfg.bases:
            report.bases = None
        emit(console, report, cfg.output, render_matroid)


def _join_command(cfg: RunConfig):
    from cli.render import emit, render_join

    service = cfg.service()
    join = cfg.load_join()
    with_bases = cfg.bases or join.n_coords <= service.cfg.enumeration_cap
    report = service.join_report(join, with_bases=with_bases)
    if not cfg.bases:
        report.matroid.bases = None
    emit(console, report, cfg.output, render_join)


@app.command()
def secant(
    input_path: Optional[Path] = _input_argument(),
    builtin: Optional[str] = _builtin_option(),
    param: Optional[List[str]] = _param_option(),
    s: int = typer.Option(2, "--order", "-s", help="Secant order"),
    bases: bool = typer.Option(False, "--bases", help="List every basis"),
    seed: Optional[int] = _seed_option(),
    trials: Optional[int] = _trials_option(),
    prime: Optional[int] = _prime_option(),
    verify_symbolic: bool = _verify_option(),
    cap: Optional[int] = _cap_option(),
    output: Optional[OutputFormat] = _output_option(),
    verbose: bool = _verbose_option()
):
    """
    Matroid and defect of the s-th secant.
    """
    with _errors():
        _join_command(_run_config(
            verbose, input_path=input_path, builtin=builtin, params=param, s=s, bases=bases, seed=seed,
            trials=trials, prime=prime, verify_symbolic=verify_symbolic, cap=cap, output=output
        ))


@app.command()
def join(
    input_path: Optional[Path] = _input_argument(),
    builtin: Optional[str] = _builtin_option(),
    param: Optional[List[str]] = _param_option(),
    bases: bool = typer.Option(False, "--bases", help="List every basis"),
    seed: Optional[int] = _seed_option(),
    trials: Optional[int] = _trials_option(),
    prime: Optional[int] = _prime_option(),
    verify_symbolic: bool = _verify_option(),
    cap: Optional[int] = _cap_option(),
    output: Optional[OutputFormat] = _output_option(),
    verbose: bool = _verbose_option()
):
    """
    Matroid and defect of a join.
    """
    with _errors():
        _join_command(_run_config(
            verbose, input_path=input_path, builtin=builtin, params=param, bases=bases, seed=seed,
            trials=trials, prime=prime, verify_symbolic=verify_symbolic, cap=cap, output=output
        ))


@app.command("union-check")
def union_check(
    input_path: Optional[Path] = _input_argument(),
    builtin: Optional[str] = _builtin_option(),
    param: Optional[List[str]] = _param_option(),
    s: int = typer.Option(1, "--order", "-s", help="Secant order for a single variety"),
    seed: Optional[int] = _seed_option(),
    trials: Optional[int] = _trials_option(),
    prime: Optional[int] = _prime_option(),
    verify_symbolic: bool = _verify_option(),
    workers: Optional[int] = _workers_option(),
    cap: Optional[int] = _cap_option(),
    output: Optional[OutputFormat] = _output_option(),
    verbose: bool = _verbose_option()
):
    """
    Decide whether the join matroid is the union of the summand matroids.

    Exit status 0 for a Terracini union, 3 otherwise.
    """
    from cli.render import emit, render_union_check

    with _errors():
        cfg = _run_config(
            verbose, input_path=input_path, builtin=builtin, params=param, s=s, seed=seed, trials=trials,
            prime=prime, verify_symbolic=verify_symbolic, workers=workers, cap=cap, output=output
        )
        report = cfg.service().union_check(cfg.load_join())
        emit(console, report, cfg.output, render_union_check)
    if not report.is_terracini_union:
        raise typer.Exit(code=EXIT_NOT_UNION)


@app.command()
def rank(
    input_path: Optional[Path] = _input_argument(),
    builtin: Optional[str] = _builtin_option(),
    param: Optional[List[str]] = _param_option(),
    s: int = typer.Option(1, "--order", "-s", help="Secant order for a single variety"),
    subset: List[str] = typer.Option(..., "--subset", "-E", help="Coordinate labels (comma-separated or repeated), or 'all'"),
    seed: Optional[int] = _seed_option(),
    trials: Optional[int] = _trials_option(),
    prime: Optional[int] = _prime_option(),
    verify_symbolic: bool = _verify_option(),
    output: Optional[OutputFormat] = _output_option(),
    verbose: bool = _verbose_option()
):
    """
    Rank of a coordinate subset and the defect of the projected join.
    """
    from cli.render import emit, render_subset_rank
    from terracini.models import SubsetRankReport

    with _errors():
        cfg = _run_config(
            verbose, input_path=input_path, builtin=builtin, params=param, s=s, subset=subset, seed=seed,
            trials=trials, prime=prime, verify_symbolic=verify_symbolic, output=output
        )
        service = cfg.service()
        join = cfg.load_join()
        labels = cfg.selected_labels(join)
        report = SubsetRankReport(
            subset=labels,
            rank=service.subset_rank(join, labels),
            defect=service.projected_join_defect(join, labels) if labels else None,
        )
        emit(console, report, cfg.output, render_subset_rank)


@app.command()
def defect(
    input_path: Optional[Path] = _input_argument(),
    builtin: Optional[str] = _builtin_option(),
    param: Optional[List[str]] = _param_option(),
    s: int = typer.Option(1, "--order", "-s", help="Secant order for a single variety"),
    seed: Optional[int] = _seed_option(),
    trials: Optional[int] = _trials_option(),
    prime: Optional[int] = _prime_option(),
    verify_symbolic: bool = _verify_option(),
    output: Optional[OutputFormat] = _output_option(),
    verbose: bool = _verbose_option()
):
    """
    Actual versus expected dimension of a join.
    """
    from cli.render import emit, render_defect

    with _errors():
        cfg = _run_config(
            verbose, input_path=input_path, builtin=builtin, params=param, s=s, seed=seed,
            trials=trials, prime=prime, verify_symbolic=verify_symbolic, output=output
        )
        emit(console, cfg.service().defect(cfg.load_join()), cfg.output, render_defect)


@app.command()
def partition(
    input_path: Optional[Path] = _input_argument(),
    builtin: Optional[str] = _builtin_option(),
    param: Optional[List[str]] = _param_option(),
    s: int = typer.Option(1, "--order", "-s", help="Secant order for a single variety"),
    subset: Optional[List[str]] = typer.Option(
        None, "--subset", "-E", help="Labels to partition (default: every basis of the join)"
    ),
    seed: Optional[int] = _seed_option(),
    trials: Optional[int] = _trials_option(),
    prime: Optional[int] = _prime_option(),
    verify_symbolic: bool = _verify_option(),
    cap: Optional[int] = _cap_option(),
    output: Optional[OutputFormat] = _output_option(),
    verbose: bool = _verbose_option()
):
    """
    Partition a set into summand-independent parts.

    Without --subset every basis of the join matroid is partitioned.
    """
    from cli.render import emit, render_partition, render_partition_report
    from terracini.models import PartitionReport

    with _errors():
        cfg = _run_config(
            verbose, input_path=input_path, builtin=builtin, params=param, s=s, subset=subset, seed=seed,
            trials=trials, prime=prime, verify_symbolic=verify_symbolic, cap=cap, output=output
        )
        service = cfg.service()
        join = cfg.load_join()
        if cfg.subset is not None:
            emit(console, service.partition(join, cfg.selected_labels(join)), cfg.output, render_partition)
            return
        certificates = service.subunion_verify(join)
        report = PartitionReport(
            join_base_count=len(certificates),
            certificates=[c.to_document(join.ground) for c in certificates],
        )
        emit(console, report, cfg.output, render_partition_report)


@app.command()
def scan(
    polytope: Optional[Path] = typer.Argument(None, help="Polytope JSON file"),
    simplex: Optional[str] = typer.Option(None, "--simplex", help="Dilated simplex as DIM,DEGREE"),
    grid_box: Optional[str] = typer.Option(None, "--grid", help="Lattice box as comma-separated bounds"),
    pattern: Optional[Path] = typer.Option(None, "--pattern", help="Pattern JSON file (default: twice the 2-simplex)"),
    verdicts: bool = typer.Option(True, "--verdicts/--no-verdicts", help="Judge each match against the 2-secant"),
    seed: Optional[int] = _seed_option(),
    trials: Optional[int] = _trials_option(),
    output: Optional[OutputFormat] = _output_option(),
    verbose: bool = _verbose_option()
):
    """
    Find translates of a pattern inside a lattice point set.
    """
    from cli.render import emit, render_scan
    from polytope.lattice import dilated_simplex, grid
    from polytope.scan import two_delta
    from polytope.schema import load_polytope_file

    configure_logging("DEBUG" if verbose else None)
    with _errors():
        sources = [polytope is not None, simplex is not None, grid_box is not None]
        if sum(sources) != 1:
            raise SpecError("give exactly one of a polytope file, --simplex or --grid")
        try:
            if simplex is not None:
                dim, degree = (int(v) for v in simplex.split(","))
                points = dilated_simplex(dim, degree)
            elif grid_box is not None:
                points = grid([int(v) for v in grid_box.split(",")])
            else:
                points = load_polytope_file(polytope)
        except ValueError as e:
            if isinstance(e, SpecError):
                raise
            raise SpecError(f"bad polytope flag: {e}") from e
        shape = load_polytope_file(pattern) if pattern is not None else two_delta(points.dim)
        report = build_service(seed=seed, trials=trials).pattern_scan(points, shape, verdicts=verdicts)
        emit(console, report, resolve_output(output), render_scan)


@app.command()
def examples(
    name: str = typer.Argument("all", help="Example name, or 'all'"),
    seed: Optional[int] = _seed_option(),
    trials: Optional[int] = _trials_option(),
    prime: Optional[int] = _prime_option(),
    verify_symbolic: bool = _verify_option(),
    workers: Optional[int] = _workers_option(),
    output: Optional[OutputFormat] = _output_option(),
    verbose: bool = _verbose_option()
):
    """
    Recompute known examples and compare with their recorded values.

    Exit status 1 if any value differs.
    """
    from pydantic import TypeAdapter

    from cli.render import render_golden
    from terracini.models import GoldenReport
    from terracini.golden import golden_names, run_golden

    configure_logging("DEBUG" if verbose else None)
    with _errors():
        output = resolve_output(output)
        names = golden_names() if name == "all" else [name]
        service = build_service(seed, trials, prime, verify_symbolic, workers)
        reports = [run_golden(n, service) for n in names]
        if output == OutputFormat.JSON:
            typer.echo(TypeAdapter(List[GoldenReport]).dump_json(reports, indent=2).decode())
        else:
            for report in reports:
                render_golden(console, report)
    failed = [r.name for r in reports if not r.passed]
    if failed:
        err_console.print(f"[bold red]Mismatch in: {', '.join(failed)}[/bold red]")
        raise typer.Exit(code=EXIT_MISMATCH)
    if output == OutputFormat.TEXT:
        console.print(f"[bold green]All {len(reports)} example(s) match[/bold green]")


@app.command()
def builtins():
    """
    List the builtin varieties.
    """
    from cli.render import render_builtins
    from geometry.registry import list_builtins

    render_builtins(console, list_builtins())


def main():
    """Entry point for the CLI."""
    app()


if __name__ == "__main__":
    main()
