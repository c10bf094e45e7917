# src/algebraicgalois/cli/main.py
"""
This module defines the command-line interface (CLI) for algebraicgalois.
It uses the Typer library; every computing command prints one canonical JSON
report on stdout, or a rich table with ``--pretty``.

Commands:
- split, group: the ambient splitting field and its Galois group.
- coordinate-ring, points, restrict: the algebraic Galois group A(N/K).
- frobenius: algebraic Frobenius at a prime, a prime range, or the infinite place.
- motive, dr: Artin motives and their de Rham realization.
- check: the verification suites.
- list, version: tool manifest and installed version.

Exit codes: 0 on success, 1 on domain errors, 2 on usage errors.
"""
import logging
from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as pkg_version
from pathlib import Path
from typing import Any, Dict, List, Optional

import sympy
import typer
from rich.console import Console
from rich.table import Table

from ..algebra.parsing import parse_polynomial
from ..core.config import Settings, load_environment
from ..core.errors import PolynomialParseError
from ..core.report import PhaseTimer, build_report, dumps_report
from ..tools.frobenius_tools import parse_sweep
from ..toolkit import GaloisToolkit

# Keep sympy's internal loggers quiet.
logging.getLogger("sympy").setLevel(logging.WARNING)

app = typer.Typer(
    name="agg",
    help="algebraicgalois: exact computations with the algebraic Galois group of number fields.",
    add_completion=False,
)
console = Console(stderr=True)

logging.basicConfig(level=logging.WARNING, format='%(asctime)s - %(levelname)s - %(name)s - %(message)s')


PolyOption = typer.Option(..., "--poly", help="Defining polynomial of the ambient field (repeatable).")
OverOption = typer.Option("Q", "--over", help="Base field K: Q, N, or a polynomial whose root generates it.")
MaxDegreeOption = typer.Option(None, "--max-degree", help="Cap on the splitting-field degree (default 24).")
CacheOption = typer.Option(None, "--ambient-cache", help="Directory for cached ambient fields.")
OutOption = typer.Option(None, "--out", help="Also write the JSON report to this file.")
PrettyOption = typer.Option(False, "--pretty", help="Render tables instead of JSON.")
WorkersOption = typer.Option(None, "--workers", help="Threads for sweeps and the check driver.")


def get_version() -> str:
    """
    Try to read version from the installed package metadata.
    Fallback to a dev version if not installed.
    """
    try:
        return pkg_version("algebraicgalois")
    except PackageNotFoundError:
        return "0.0.0 (dev)"


def _validate_polynomials(*groups: Optional[List[str]], max_degree: Optional[int] = None):
    """Parse every polynomial argument before any computation starts."""
    load_environment()
    cap = max_degree or Settings.from_env().max_degree
    for group in groups:
        for text in group or []:
            if text.strip().upper() in ("Q", "QQ", "N"):
                continue
            try:
                parse_polynomial(text, cap)
            except PolynomialParseError as e:
                raise typer.BadParameter(f"{e.message} ({text!r})")


def _toolkit(max_degree: Optional[int], cache: Optional[str], workers: Optional[int] = None) -> GaloisToolkit:
    if max_degree is not None and max_degree < 1:
        raise typer.BadParameter("--max-degree must be positive")
    if workers is not None and workers < 1:
        raise typer.BadParameter("--workers must be positive")
    load_environment()
    settings = Settings.from_env().override(cache_dir=cache, max_degree=max_degree, workers=workers)
    return GaloisToolkit(settings)


def _render_pretty(results: Dict[str, Any]):
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Key", style="dim", width=30)
    table.add_column("Value")
    for key in sorted(results):
        value = results[key]
        if isinstance(value, (dict, list)):
            text = f"{type(value).__name__} of {len(value)}"
        else:
            text = str(value)
        table.add_row(key, text)
    console.print(table)


def _render_check(results: Dict[str, Any]):
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Check", style="dim", width=40)
    table.add_column("Status")
    table.add_column("Blocking")
    for job in results.get("jobs", []):
        status = "[green]pass[/green]" if job["passed"] else "[red]fail[/red]"
        table.add_row(job["id"], status, "yes" if job["blocking"] else "no")
    console.print(table)


def _run(
    tool: str,
    args: Dict[str, Any],
    toolkit: GaloisToolkit,
    out: Optional[Path],
    pretty: bool,
):
    timer = PhaseTimer()
    with timer.phase(tool):
        result = toolkit.handle_tool_call(tool, args)
    command = {"tool": tool, **{k: v for k, v in args.items() if v is not None}}
    if "error" in result:
        report = build_report(command, {"error": result["error"]}, timer.phases)
        text = dumps_report(report)
        typer.echo(text, nl=False)
        if out:
            out.write_text(text, encoding="utf-8")
        raise typer.Exit(code=1)
    results = {k: v for k, v in result.items() if k != "success"}
    report = build_report(command, results, timer.phases)
    text = dumps_report(report)
    if out:
        out.write_text(text, encoding="utf-8")
    if pretty:
        if tool == "check":
            _render_check(report["results"])
        else:
            _render_pretty(report["results"])
    else:
        typer.echo(text, nl=False)
    if tool == "check" and not result.get("passed", False):
        console.print(f"[bold red]Blocking checks failed:[/bold red] {', '.join(result.get('failed', []))}")
        raise typer.Exit(code=1)


@app.command()
def split(
    poly: List[str] = PolyOption,
    max_degree: Optional[int] = MaxDegreeOption,
    ambient_cache: Optional[str] = CacheOption,
    out: Optional[Path] = OutOption,
    pretty: bool = PrettyOption,
):
    """Build the splitting field N of the polynomials and Gal(N/Q)."""
    _validate_polynomials(poly, max_degree=max_degree)
    _run("split", {"polys": poly}, _toolkit(max_degree, ambient_cache), out, pretty)


@app.command()
def group(
    poly: List[str] = PolyOption,
    max_degree: Optional[int] = MaxDegreeOption,
    ambient_cache: Optional[str] = CacheOption,
    out: Optional[Path] = OutOption,
    pretty: bool = PrettyOption,
):
    """Show the Galois group: table, classes, center, normal subgroups, cycle types."""
    _validate_polynomials(poly, max_degree=max_degree)
    _run("group", {"polys": poly}, _toolkit(max_degree, ambient_cache), out, pretty)


@app.command("coordinate-ring")
def coordinate_ring(
    poly: List[str] = PolyOption,
    over: str = OverOption,
    hopf: bool = typer.Option(True, "--hopf/--no-hopf", help="Include comultiplication, counit and antipode."),
    max_degree: Optional[int] = MaxDegreeOption,
    ambient_cache: Optional[str] = CacheOption,
    out: Optional[Path] = OutOption,
    pretty: bool = PrettyOption,
):
    """Export A(N/K) with its Hopf structure and checks."""
    _validate_polynomials(poly, [over], max_degree=max_degree)
    _run("coordinate_ring", {"polys": poly, "over": over, "hopf": hopf}, _toolkit(max_degree, ambient_cache), out, pretty)


@app.command()
def points(
    poly: List[str] = PolyOption,
    over: str = OverOption,
    at: Optional[str] = typer.Option(None, "--at", help="Target subfield M (default: N)."),
    max_degree: Optional[int] = MaxDegreeOption,
    ambient_cache: Optional[str] = CacheOption,
    out: Optional[Path] = OutOption,
    pretty: bool = PrettyOption,
):
    """List the M-points of A(N/K)."""
    _validate_polynomials(poly, [over], [at] if at else None, max_degree=max_degree)
    args = {"polys": poly, "over": over, "at": at}
    _run("points", args, _toolkit(max_degree, ambient_cache), out, pretty)


@app.command()
def restrict(
    poly: List[str] = PolyOption,
    over: str = OverOption,
    extend: Optional[str] = typer.Option(None, "--extend", help="Extra polynomial; compare embeddings into the larger field."),
    max_degree: Optional[int] = MaxDegreeOption,
    ambient_cache: Optional[str] = CacheOption,
    out: Optional[Path] = OutOption,
    pretty: bool = PrettyOption,
):
    """Restriction maps for every embedding, compared exactly."""
    _validate_polynomials(poly, [over], [extend] if extend else None, max_degree=max_degree)
    args = {"polys": poly, "over": over, "extend": extend}
    _run("restrict", args, _toolkit(max_degree, ambient_cache), out, pretty)


@app.command()
def frobenius(
    poly: List[str] = PolyOption,
    prime: Optional[int] = typer.Option(None, "-p", "--prime", help="A rational prime."),
    sweep: Optional[str] = typer.Option(None, "--sweep", help="Prime range A..B."),
    infinite: bool = typer.Option(False, "--infinite", help="Frobenius at the infinite place."),
    max_degree: Optional[int] = MaxDegreeOption,
    ambient_cache: Optional[str] = CacheOption,
    workers: Optional[int] = WorkersOption,
    out: Optional[Path] = OutOption,
    pretty: bool = PrettyOption,
):
    """Algebraic Frobenius at a prime, over a range of primes, or at infinity."""
    _validate_polynomials(poly, max_degree=max_degree)
    chosen = [x for x in (prime is not None, sweep is not None, infinite) if x]
    if len(chosen) != 1:
        raise typer.BadParameter("give exactly one of -p/--prime, --sweep or --infinite")
    if prime is not None:
        if not sympy.isprime(prime):
            raise typer.BadParameter(f"{prime} is not a prime")
        tool, args = "frobenius", {"polys": poly, "prime": prime}
    elif sweep is not None:
        try:
            parse_sweep(sweep)
        except ValueError as e:
            raise typer.BadParameter(str(e))
        tool, args = "frobenius_sweep", {"polys": poly, "sweep": sweep, "workers": workers}
    else:
        tool, args = "frobenius_infinity", {"polys": poly}
    _run(tool, args, _toolkit(max_degree, ambient_cache, workers), out, pretty)


@app.command()
def motive(
    poly: List[str] = PolyOption,
    scheme: Optional[List[str]] = typer.Option(None, "--scheme", help="Component polynomial of X (repeatable)."),
    regular: bool = typer.Option(False, "--regular", help="Use the regular motive."),
    report: bool = typer.Option(False, "--report", help="Add sections, realizations and comparison checks."),
    max_degree: Optional[int] = MaxDegreeOption,
    ambient_cache: Optional[str] = CacheOption,
    out: Optional[Path] = OutOption,
    pretty: bool = PrettyOption,
):
    """The Artin motive h(X) of a finite étale scheme."""
    _validate_polynomials(poly, scheme, max_degree=max_degree)
    args = {"polys": poly, "schemes": scheme or None, "regular": regular, "report": report}
    _run("motive", args, _toolkit(max_degree, ambient_cache), out, pretty)


@app.command()
def dr(
    poly: List[str] = PolyOption,
    scheme: Optional[List[str]] = typer.Option(None, "--scheme", help="Component polynomial of X (repeatable)."),
    regular: bool = typer.Option(False, "--regular", help="Use the regular motive."),
    max_degree: Optional[int] = MaxDegreeOption,
    ambient_cache: Optional[str] = CacheOption,
    out: Optional[Path] = OutOption,
    pretty: bool = PrettyOption,
):
    """de Rham realization of a motive with its coaction."""
    _validate_polynomials(poly, scheme, max_degree=max_degree)
    args = {"polys": poly, "schemes": scheme or None, "regular": regular}
    _run("dr", args, _toolkit(max_degree, ambient_cache), out, pretty)


@app.command()
def check(
    suite: str = typer.Option("all", "--suite", help="all, algebra, galois, groupscheme, frobenius, motives or cli."),
    max_degree: Optional[int] = MaxDegreeOption,
    ambient_cache: Optional[str] = CacheOption,
    workers: Optional[int] = WorkersOption,
    out: Optional[Path] = OutOption,
    pretty: bool = PrettyOption,
):
    """Run the verification suites; exit 1 when a blocking check fails."""
    from ..tools.check_suite import SUITES

    if suite != "all" and suite not in SUITES:
        raise typer.BadParameter(f"unknown suite {suite!r}")
    args = {"suite": suite, "workers": workers}
    _run("check", args, _toolkit(max_degree, ambient_cache, workers), out, pretty)


@app.command(name="list")
def list_tools():
    """
    Lists all available tools and their descriptions.
    """
    console.print("[bold green]Available Tools:[/bold green]")
    toolkit = GaloisToolkit(Settings.from_env())
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Tool Name", style="dim", width=30)
    table.add_column("Description")
    for tool in sorted(toolkit.tools.values(), key=lambda t: t["name"]):
        table.add_row(tool["name"], tool["description"])
    console.print(table)


@app.command("version")
def version_cmd():
    """Show the application version."""
    console.print(f"algebraicgalois [bold cyan]{get_version()}[/bold cyan]")


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "--verbose", help="Log progress (DEBUG level) to stderr."),
    version_: bool = typer.Option(
        None,
        "--version",
        "-v",
        help="Show the application version and exit.",
        is_eager=True,
    ),
):
    """
    Main entry point for the agg CLI application.
    If no subcommand is provided, it displays a short usage hint.
    """
    if version_:
        console.print(f"algebraicgalois [bold cyan]{get_version()}[/bold cyan]")
        raise typer.Exit()
    logging.getLogger().setLevel(logging.DEBUG if verbose else logging.WARNING)
    logging.getLogger("sympy").setLevel(logging.WARNING)

    if ctx.invoked_subcommand is None:
        console.print("[bold green]algebraicgalois (agg)[/bold green]\n")
        console.print("👉 Run [cyan]agg split --poly \"x^3-2\"[/cyan] to build a splitting field.")
        console.print("👉 Run [cyan]agg check --suite all[/cyan] to run every verification suite.")
        console.print("👉 Run [cyan]agg --help[/cyan] to see all available commands.\n")
