"""
Command-line interface for the filtered-scheme benchmarks.

Commands:
- hjfilter run: Refinement study of one problem, table to stdout or a file
- hjfilter tables: Reproduce every benchmark table from a YAML config
- hjfilter problems: List problems and their default settings
"""

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, List, Optional

import typer
from rich.panel import Panel
from rich.table import Table

from hjfilter.utils.console import console, set_quiet

app = typer.Typer(
    name="hjfilter",
    help="Filtered schemes for Hamilton-Jacobi equations: convergence benchmarks.",
    add_completion=False,
)

LIMITER_CHOICES = ("on", "off")


@dataclass
class RunSpec:
    """Validated options of the run command."""
    
    problem: str
    schemes: List[str]
    filter_name: str = "new"
    eps_c1: Optional[float] = None
    limiter: Optional[str] = None
    levels: List[int] = field(default_factory=list)
    cfl: Optional[float] = None
    fmt: str = "csv"
    out: Optional[Path] = None
    plot: bool = False
    plot_dir: Optional[Path] = None
    quiet: bool = False
    
    def to_dict(self) -> Dict[str, Any]:
        return {
            "problem": self.problem,
            "schemes": list(self.schemes),
            "filter": self.filter_name,
            "eps_c1": self.eps_c1,
            "limiter": self.limiter,
            "levels": list(self.levels),
            "cfl": self.cfl,
        }


def _split_list(text: str) -> List[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _parse_levels(text: str) -> List[int]:
    from hjfilter.analysis.convergence import validate_levels
    
    try:
        return validate_levels([int(item) for item in _split_list(text)])
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--levels")


def resolve_limiter(choice: Optional[str], dim: int) -> Optional[str]:
    """Map on/off to the limiter of the problem's dimension (None keeps the default)."""
    if choice is None:
        return None
    if choice == "off":
        return "off"
    return "extrema1d" if dim == 1 else "clamp2d"


def build_run_spec(
    problem: Optional[str],
    scheme: Optional[str] = None,
    filter_name: str = "new",
    eps_c1: Optional[float] = None,
    limiter: Optional[str] = None,
    levels: Optional[str] = None,
    cfl: Optional[float] = None,
    fmt: str = "csv",
    out: Optional[Path] = None,
    plot: bool = False,
    plot_dir: Optional[Path] = None,
    quiet: bool = False,
) -> RunSpec:
    """
    Validate raw options into a RunSpec.
    
    Raises:
        typer.BadParameter: On unknown names, malformed levels or a scheme the
            problem cannot run
    """
    from hjfilter.output.tables import TABLE_FORMATS
    from hjfilter.problems import get_problem
    from hjfilter.schemes import FILTERS
    from hjfilter.schemes.solver import validate_variant
    
    if not problem:
        raise typer.BadParameter("a problem identifier is required", param_hint="--problem")
    try:
        prob = get_problem(problem)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--problem")
    
    schemes = _split_list(scheme) if scheme else list(prob.schemes)
    for name in schemes:
        try:
            validate_variant(name, prob)
        except ValueError as e:
            raise typer.BadParameter(str(e), param_hint="--scheme")
    
    if filter_name not in FILTERS:
        raise typer.BadParameter(
            f"Unknown filter '{filter_name}'. Available: {list(FILTERS.keys())}",
            param_hint="--filter",
        )
    if limiter is not None and limiter not in LIMITER_CHOICES:
        raise typer.BadParameter(f"Expected one of {list(LIMITER_CHOICES)}", param_hint="--limiter")
    if fmt not in TABLE_FORMATS:
        raise typer.BadParameter(f"Expected one of {list(TABLE_FORMATS)}", param_hint="--format")
    if eps_c1 is not None and not eps_c1 > 0:
        raise typer.BadParameter(f"must be positive, got {eps_c1}", param_hint="--eps-c1")
    if cfl is not None and not 0 < cfl <= 1:
        raise typer.BadParameter(f"must be in (0, 1], got {cfl}", param_hint="--cfl")
    
    return RunSpec(
        problem=problem,
        schemes=schemes,
        filter_name=filter_name,
        eps_c1=eps_c1,
        limiter=resolve_limiter(limiter, prob.dim),
        levels=_parse_levels(levels) if levels else list(prob.levels),
        cfl=cfl,
        fmt=fmt,
        out=out,
        plot=plot,
        plot_dir=plot_dir,
        quiet=quiet,
    )


def parse_args(argv: List[str]) -> RunSpec:
    """
    Parse ``run`` command arguments without executing the study.
    
    Raises:
        click.UsageError: On missing or invalid options
    """
    group = typer.main.get_command(app)
    command = group.get_command(None, "run")
    ctx = command.make_context("run", list(argv))
    return build_run_spec(**ctx.params)


def scheme_config(problem, filter_name: str, eps_c1: Optional[float], limiter: Optional[str]):
    """SchemeConfig with the problem defaults and the given overrides."""
    from hjfilter.schemes import SchemeConfig, get_filter
    
    epsilon = None if eps_c1 is None else replace(problem.epsilon, c1=eps_c1)
    return SchemeConfig(filter=get_filter(filter_name), epsilon=epsilon, limiter=limiter)


def run_study(problem, schemes, levels, config, cfl=None, keep_finest: Optional[Dict] = None):
    """Refinement study of each scheme; rows keyed by scheme."""
    from hjfilter.analysis.convergence import refinement_study
    
    rows_by_scheme = {}
    for name in schemes:
        collector = None
        if keep_finest is not None:
            def collector(result, name=name):
                keep_finest[name] = result
        rows_by_scheme[name] = refinement_study(
            problem, name, levels, config=config, cfl=cfl, on_run=collector
        )
    return rows_by_scheme


@app.command()
def run(
    problem: Optional[str] = typer.Option(
        None,
        "--problem", "-p",
        help="Problem identifier (see 'hjfilter problems')",
    ),
    scheme: Optional[str] = typer.Option(
        None,
        "--scheme", "-s",
        help="Scheme variant or comma-separated list (default: the problem's table columns)",
    ),
    filter_name: str = typer.Option("new", "--filter", help="Filter function: new | fo"),
    eps_c1: Optional[float] = typer.Option(None, "--eps-c1", help="eps = c1 * dx"),
    limiter: Optional[str] = typer.Option(None, "--limiter", help="on | off"),
    levels: Optional[str] = typer.Option(None, "--levels", help="Comma-separated M list, doubling"),
    cfl: Optional[float] = typer.Option(None, "--cfl", help="CFL number override"),
    fmt: str = typer.Option("csv", "--format", "-f", help="csv | md"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output file (default: stdout)"),
    plot: bool = typer.Option(False, "--plot", help="Write plot data of the finest level"),
    plot_dir: Optional[Path] = typer.Option(None, "--plot-dir", help="Directory for plot data"),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="No progress output"),
):
    """
    Run a refinement study and print its convergence table.
    """
    from hjfilter.output.plotdata import emit_plot_data
    from hjfilter.output.tables import emit_table
    from hjfilter.problems import get_problem
    from hjfilter.utils.hashing import array_digest
    
    spec = build_run_spec(
        problem, scheme, filter_name, eps_c1, limiter, levels, cfl, fmt, out, plot, plot_dir, quiet
    )
    set_quiet(spec.quiet)
    prob = get_problem(spec.problem)
    
    if not spec.quiet:
        console.print(Panel(
            f"[bold blue]{prob.title}[/] ({prob.key})\n"
            f"Schemes: {', '.join(spec.schemes)}\n"
            f"Levels: {spec.levels}",
            title="Refinement Study",
        ))
    
    config = scheme_config(prob, spec.filter_name, spec.eps_c1, spec.limiter)
    finest: Dict[str, Any] = {}
    rows_by_scheme = run_study(
        prob, spec.schemes, spec.levels, config, spec.cfl, finest if spec.plot else None
    )
    table = emit_table(rows_by_scheme, spec.fmt, title=f"{prob.title} ({prob.key})")
    
    try:
        if spec.out is not None:
            spec.out.parent.mkdir(parents=True, exist_ok=True)
            spec.out.write_bytes(table)
        else:
            typer.echo(table.decode("utf-8"), nl=False)
        
        if spec.plot:
            target = spec.plot_dir or (spec.out.parent if spec.out is not None else Path("plots"))
            for name, result in finest.items():
                path = target / f"{prob.key}_{name}_M{result.M}.dat"
                emit_plot_data(
                    result.field,
                    prob.exact_values(result.grid, result.field.t) if prob.dim == 1 else None,
                    path,
                    meta={
                        "problem": prob.key,
                        "scheme": name,
                        "M": result.M,
                        "digest": array_digest(result.field.values),
                    },
                )
                if not spec.quiet:
                    console.print(f"  ✓ Plot data: {path}")
    except OSError as e:
        console.print(f"[red]Error writing output:[/] {e}")
        raise typer.Exit(1)
    
    if spec.out is not None and not spec.quiet:
        console.print(f"  ✓ Table: {spec.out}")


@app.command()
def tables(
    config: str = typer.Option(
        "config/benchmark_tables.yaml",
        "--config", "-c",
        help="Path to YAML configuration file",
    ),
    quiet: bool = typer.Option(False, "--quiet", "-q", help="No progress output"),
):
    """
    Reproduce all benchmark tables listed in a config file.
    
    Writes CSV, markdown and parquet tables plus a metadata JSON under
    outputs/runs/<run_id>/.
    """
    from hjfilter.analysis.convergence import rows_to_frame, validate_levels
    from hjfilter.output.metadata import summarize_rows, write_run_metadata
    from hjfilter.output.tables import emit_table
    from hjfilter.problems import get_problem
    from hjfilter.schemes.solver import validate_variant
    from hjfilter.utils.io import ensure_dir, get_output_paths, get_project_root, load_config, resolve_path
    
    set_quiet(quiet)
    root = get_project_root()
    config_path = resolve_path(config, root)
    
    try:
        cfg = load_config(config_path)
    except Exception as e:
        console.print(f"[red]Error loading config:[/] {e}")
        raise typer.Exit(1)
    
    paths = get_output_paths(cfg, root)
    tables_dir = ensure_dir(paths["tables_dir"])
    
    if not quiet:
        console.print(Panel(
            f"[bold blue]Benchmark tables[/]\n"
            f"Config: {config_path}\n"
            f"Run ID: [cyan]{cfg['run_id']}[/]",
            title="Starting Tables",
        ))
    
    emitted: Dict[str, bytes] = {}
    summary: Dict[str, Any] = {}
    entries = []
    for entry in cfg["tables"]:
        try:
            prob = get_problem(entry["problem"])
            schemes = list(entry.get("schemes", prob.schemes))
            for name in schemes:
                validate_variant(name, prob)
            levels = validate_levels(entry.get("levels", prob.levels))
            limiter = entry.get("limiter")
            if limiter is not None and limiter not in LIMITER_CHOICES:
                raise ValueError(f"Unknown limiter '{limiter}'. Available: {list(LIMITER_CHOICES)}")
            settings = scheme_config(
                prob,
                entry.get("filter", "new"),
                entry.get("eps_c1"),
                resolve_limiter(limiter, prob.dim),
            )
        except ValueError as e:
            console.print(f"[red]Error in table entry '{entry.get('name', entry['problem'])}':[/] {e}")
            raise typer.Exit(1)
        
        name = entry.get("name", prob.key)
        if not quiet:
            console.print(f"[bold]{name}: {prob.title}[/]")
        rows_by_scheme = run_study(prob, schemes, levels, settings, entry.get("cfl"))
        frame = rows_to_frame(rows_by_scheme)
        
        try:
            for fmt, suffix in (("csv", ".csv"), ("md", ".md")):
                data = emit_table(frame, fmt, title=f"{prob.title} ({prob.key})")
                (tables_dir / f"{name}{suffix}").write_bytes(data)
                emitted[f"{name}{suffix}"] = data
            frame.to_parquet(tables_dir / f"{name}.parquet", index=False)
        except OSError as e:
            console.print(f"[red]Error writing tables:[/] {e}")
            raise typer.Exit(1)
        
        summary[name] = summarize_rows(rows_by_scheme)
        entries.append({
            "name": name,
            "problem": prob.key,
            "schemes": schemes,
            "levels": levels,
            "cfl": entry.get("cfl"),
            "eps_c1": entry.get("eps_c1"),
            "limiter": entry.get("limiter"),
            "filter": entry.get("filter", "new"),
        })
    
    meta_path = write_run_metadata(
        {"run_id": cfg["run_id"], "tables": entries},
        summary,
        emitted,
        paths["meta_dir"] / "run_metadata.json",
    )
    
    if not quiet:
        console.print(Panel(
            f"[bold green]Tables Complete![/]\n\n"
            f"  • Tables: {tables_dir}/\n"
            f"  • Metadata: {meta_path}",
            title="Complete",
        ))


@app.command()
def problems():
    """
    List the benchmark problems with their default settings.
    """
    from hjfilter.problems import PROBLEMS, get_problem
    
    table = Table(title="Problems")
    for column in ("id", "title", "dim", "T", "cfl", "eps", "limiter", "norm", "levels", "schemes"):
        table.add_column(column)
    for key in PROBLEMS:
        prob = get_problem(key)
        table.add_row(
            key,
            prob.title,
            str(prob.dim),
            "steady" if prob.steady else f"{prob.T:g}",
            f"{prob.cfl:g}",
            f"{prob.epsilon.c1:g} dx",
            prob.limiter,
            prob.norm,
            ",".join(str(m) for m in prob.levels),
            ",".join(prob.schemes),
        )
    console.print(table)


if __name__ == "__main__":
    app()
