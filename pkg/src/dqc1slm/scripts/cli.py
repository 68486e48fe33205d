#!/usr/bin/env python3
"""
DQC1 SLM CLI Interface

Command-line interface for the one-clean-qubit SLM simulator.
Builds masks and beam profiles, estimates normalized traces, runs the
Deutsch-Jozsa oracle test and writes plot-ready reports.
"""

import functools
import json
import logging
import math
import re
from pathlib import Path
from typing import List, Optional

import click
import pandas as pd
from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from ..beam_profile import flat, from_counts, gaussian, load_counts, load_profile, save_profile
from ..beam_profile.profiles import cell_masses
from ..config.local_config import LOGGING_CONFIG
from ..config.simulation_config_manager import (
    SAMPLING_MODES,
    SimulationConfigManager,
    get_simulation_config,
    set_simulation_config_manager,
)
from ..data_models.domain_models_core import CellSpec, CountsGrid, IntensityProfile, PanelDims
from ..data_models.domain_models_measurement import MeasurementConfig, Verdict
from ..data_models.factories import CellFactory, PanelFactory, RampFactory
from ..deutsch_jozsa import make_oracle, resolution_sweep, run_dj, summarize_sweep
from ..dqc1_core import analytic_trace, compensated_sum, exact_normalized_trace
from ..exceptions import Dqc1SlmError
from ..measurement_sim import monte_carlo_trace
from ..phase_mask import (
    load_mask,
    make_constant,
    make_half_split,
    make_linear_ramp,
    make_random_balanced,
    quantize,
    register_qubits,
    save_mask,
)
from ..reports import (
    ComplexValue,
    EstimateInfo,
    MeasurementInfo,
    NoiseInfo,
    PanelInfo,
    RunReport,
    VerdictInfo,
    digest_inputs,
    echo_parameters,
    finish_timing,
    report_schema as build_report_schema,
    start_timing,
    write_report,
    write_report_schema,
)

# Setup rich console for beautiful output
console = Console()
err_console = Console(stderr=True)
logger = logging.getLogger(__name__)

_ANGLE_PATTERN = re.compile(r"^([+-]?(?:\d+\.?\d*|\.\d+)?)\s*pi(?:\s*/\s*(\d+(?:\.\d*)?))?$", re.IGNORECASE)


class AngleType(click.ParamType):
    """Radians as a plain number or a '<k>pi' literal ('0.5pi', '-pi', '3pi/4')"""

    name = "angle"

    def convert(self, value, param, ctx):
        if isinstance(value, (int, float)):
            return float(value)
        text = str(value).strip()
        match = _ANGLE_PATTERN.match(text)
        if match:
            coefficient = match.group(1)
            if coefficient in ("", "+"):
                factor = 1.0
            elif coefficient == "-":
                factor = -1.0
            else:
                factor = float(coefficient)
            divisor = float(match.group(2)) if match.group(2) else 1.0
            return factor * math.pi / divisor
        try:
            return float(text)
        except ValueError:
            self.fail(f"{value!r} is not an angle (use radians or '<k>pi')", param, ctx)


class DimsType(click.ParamType):
    """Panel dimensions '<width>x<height>'"""

    name = "WxH"

    def convert(self, value, param, ctx):
        if isinstance(value, PanelDims):
            return value
        try:
            return PanelDims.parse(str(value))
        except Dqc1SlmError as e:
            self.fail(str(e), param, ctx)


ANGLE = AngleType()
DIMS = DimsType()


def guarded(command):
    """Map simulator and I/O errors to the CLI exit-code contract"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except Dqc1SlmError as e:
            logger.debug(f"{command.__name__} failed", exc_info=True)
            err_console.print(f"[red]❌ {type(e).__name__}: {e}[/red]")
            ctx.exit(e.exit_code)
        except OSError as e:
            err_console.print(f"[red]❌ I/O error: {e}[/red]")
            ctx.exit(1)

    return wrapper


def _default_dims(dims: Optional[PanelDims]) -> PanelDims:
    return dims if dims is not None else PanelFactory.create_default_panel()


def _default_p(p: Optional[float]) -> float:
    return get_simulation_config().noise.dephasing_p if p is None else p


def _measurement_config(photons: int, seed: Optional[int], mode: Optional[str]) -> MeasurementConfig:
    defaults = get_simulation_config().measurement
    return MeasurementConfig(
        photons_per_basis=photons,
        seed=defaults.seed if seed is None else seed,
        mode=mode or defaults.mode,
    )


def _resolve_profile(
    profile_path: Optional[Path], counts: Optional[CountsGrid], dims: PanelDims
) -> IntensityProfile:
    """Profile file, else counts ingested onto dims, else a flat beam"""
    if profile_path is not None:
        return load_profile(profile_path)
    if counts is not None:
        return from_counts(counts, dims)
    return flat(dims)


def _fmt(value: float, error: Optional[float] = None) -> str:
    if error:
        return f"{value:+.4f} ± {error:.4f}"
    return f"{value:+.4f}"


@click.group()
@click.version_option(package_name="dqc1slm")
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
@click.option(
    "--threads",
    type=click.IntRange(min=1),
    default=None,
    help="Worker threads for reductions and sampling (default: DQC1SLM_THREADS or config)",
)
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="Alternate simulation configuration YAML",
)
@click.pass_context
def main(ctx, verbose: bool, threads: Optional[int], config_path: Optional[Path]):
    """
    DQC1 SLM - one-clean-qubit trace estimation on a virtual spatial light modulator

    Build phase masks and beam profiles, estimate normalized traces and run the
    Deutsch-Jozsa oracle test.
    """
    # Setup logging
    level = LOGGING_CONFIG["verbose_level"] if verbose else LOGGING_CONFIG["level"]
    logging.basicConfig(level=getattr(logging, level), format=LOGGING_CONFIG["format"])

    if config_path is not None:
        try:
            set_simulation_config_manager(SimulationConfigManager(config_path))
        except Dqc1SlmError as e:
            err_console.print(f"[red]❌ Invalid configuration {config_path}: {e}[/red]")
            ctx.exit(e.exit_code)

    # Store in context for subcommands
    ctx.ensure_object(dict)
    ctx.obj["threads"] = threads
    ctx.obj["verbose"] = verbose


@main.command("make-mask")
@click.argument(
    "kind",
    type=click.Choice(["constant", "half-split", "random-balanced", "linear-ramp"]),
)
@click.option("--dims", type=DIMS, default=None, help="Panel WxH (default: from config)")
@click.option(
    "--phase",
    type=ANGLE,
    default=0.0,
    show_default=True,
    help="Phase of a constant mask",
)
@click.option(
    "--phase-upper",
    type=ANGLE,
    default=0.0,
    show_default=True,
    help="Upper-half phase (half-split)",
)
@click.option(
    "--phase-lower",
    type=ANGLE,
    default=math.pi,
    help="Lower-half phase (half-split) [default: pi]",
)
@click.option(
    "--cells",
    type=click.IntRange(min=1),
    default=1,
    show_default=True,
    help="Square cell edge (random-balanced)",
)
@click.option(
    "--seed",
    type=click.IntRange(min=0),
    default=0,
    show_default=True,
    help="Placement seed (random-balanced)",
)
@click.option("--phi-start", type=ANGLE, default=None, help="Ramp start phase (linear-ramp)")
@click.option("--phi-end", type=ANGLE, default=None, help="Ramp end phase (linear-ramp)")
@click.option(
    "--literal",
    is_flag=True,
    help="Ramp increment (j/N_y)*phi_end instead of spanning [start, end)",
)
@click.option(
    "--levels",
    type=click.IntRange(min=2),
    default=None,
    help="Quantize to this many phase levels",
)
@click.option(
    "--out",
    "out_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=Path("mask.pmask"),
    show_default=True,
)
@click.pass_context
@guarded
def make_mask(
    ctx,
    kind: str,
    dims: Optional[PanelDims],
    phase: float,
    phase_upper: float,
    phase_lower: float,
    cells: int,
    seed: int,
    phi_start: Optional[float],
    phi_end: Optional[float],
    literal: bool,
    levels: Optional[int],
    out_path: Path,
):
    """
    Build a phase mask and write it as a PMASK1 file.

    Examples:
        dqc1slm make-mask constant --phase pi --out minus.pmask
        dqc1slm make-mask random-balanced --cells 10 --seed 42
        dqc1slm make-mask linear-ramp --dims 1920x1080 --phi-start 0.5pi --phi-end 1.0pi
    """
    dims = _default_dims(dims)

    if kind == "constant":
        mask = make_constant(dims, phase)
    elif kind == "half-split":
        mask = make_half_split(dims, phase_upper, phase_lower)
    elif kind == "random-balanced":
        mask = make_random_balanced(dims, CellSpec.square(cells), seed)
    else:
        if phi_start is None or phi_end is None:
            raise click.UsageError("linear-ramp needs both --phi-start and --phi-end", ctx=ctx)
        mask = make_linear_ramp(dims, phi_start, phi_end, literal=literal)

    if levels is not None:
        mask = quantize(mask, levels)

    save_mask(mask, out_path)
    console.print(f"[green]✅ Wrote {kind} mask {dims} to {out_path}[/green]")


@main.command("make-profile")
@click.argument("kind", type=click.Choice(["flat", "gaussian"]))
@click.option("--dims", type=DIMS, default=None, help="Panel WxH (default: from config)")
@click.option("--waist", type=float, default=None, help="Gaussian 1/e^2 radius in pixels")
@click.option(
    "--center-x",
    type=float,
    default=None,
    help="Beam center x in pixels (default: panel center)",
)
@click.option(
    "--center-y",
    type=float,
    default=None,
    help="Beam center y in pixels (default: panel center)",
)
@click.option(
    "--out",
    "out_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=Path("profile.iprof"),
    show_default=True,
)
@click.pass_context
@guarded
def make_profile(
    ctx,
    kind: str,
    dims: Optional[PanelDims],
    waist: Optional[float],
    center_x: Optional[float],
    center_y: Optional[float],
    out_path: Path,
):
    """
    Build a beam intensity profile and write it as an IPROF1 file.

    Example:
        dqc1slm make-profile gaussian --waist 300 --out beam.iprof
    """
    dims = _default_dims(dims)
    if kind == "flat":
        profile = flat(dims)
    else:
        if waist is None:
            raise click.UsageError("gaussian profile needs --waist", ctx=ctx)
        profile = gaussian(dims, waist, center_x=center_x, center_y=center_y)

    save_profile(profile, out_path)
    console.print(f"[green]✅ Wrote {kind} profile {dims} to {out_path}[/green]")


@main.command()
@click.argument("mask_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option(
    "--profile",
    "profile_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="IPROF1 beam profile (default: flat)",
)
@click.option(
    "--counts",
    "counts_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="CGRID1 counts for the Poisson systematic term",
)
@click.option(
    "--p",
    "p",
    type=click.FloatRange(0.0, 0.5),
    default=None,
    help="Dephasing parameter (default: from config)",
)
@click.option(
    "--levels",
    type=click.IntRange(min=2),
    default=None,
    help="Phase levels for systematic errors",
)
@click.option(
    "--photons",
    type=click.IntRange(min=1),
    default=None,
    help="Photons per basis; omit for analytic only",
)
@click.option(
    "--seed",
    type=click.IntRange(min=0),
    default=None,
    help="Monte Carlo seed (default: from config)",
)
@click.option(
    "--mode",
    type=click.Choice(SAMPLING_MODES),
    default=None,
    help="Sampling mode (default: from config)",
)
@click.option(
    "--report",
    "report_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=Path("report.json"),
    show_default=True,
)
@click.pass_context
@guarded
def trace(
    ctx,
    mask_path: Path,
    profile_path: Optional[Path],
    counts_path: Optional[Path],
    p: Optional[float],
    levels: Optional[int],
    photons: Optional[int],
    seed: Optional[int],
    mode: Optional[str],
    report_path: Path,
):
    """
    Estimate the normalized trace encoded by a mask and write a JSON report.

    Example:
        dqc1slm trace ramp.pmask --p 0.08 --photons 1000000 --seed 7
    """
    started_at = start_timing()
    threads = ctx.obj["threads"]
    p = _default_p(p)

    mask = load_mask(mask_path)
    counts = load_counts(counts_path) if counts_path is not None else None
    profile = _resolve_profile(profile_path, counts, mask.dims)

    exact = exact_normalized_trace(mask, threads=threads)
    analytic = analytic_trace(mask, profile, p, levels=levels, counts=counts, threads=threads)

    config = None
    estimate = None
    if photons is not None:
        config = _measurement_config(photons, seed, mode)
        estimate = monte_carlo_trace(mask, profile, p, config, threads=threads)

    table = Table(title=f"Normalized trace of {mask_path.name}", box=box.ROUNDED)
    table.add_column("Estimate", style="cyan")
    table.add_column("Re", justify="right")
    table.add_column("Im", justify="right")
    table.add_row("exact (flat, p=0)", _fmt(exact.real), _fmt(exact.imag))
    table.add_row(f"analytic (p={p})", _fmt(analytic.re, analytic.sys_err_re), _fmt(analytic.im, analytic.sys_err_im))
    if estimate is not None:
        table.add_row(
            f"Monte Carlo ({estimate.photons_used:,} photons)",
            _fmt(estimate.re, estimate.stat_err_re),
            _fmt(estimate.im, estimate.stat_err_im),
        )
    console.print(table)

    report = RunReport(
        command="trace",
        parameters=echo_parameters(ctx.params),
        inputs=digest_inputs({"mask": mask_path, "profile": profile_path, "counts": counts_path}),
        panel=PanelInfo.from_dims(mask.dims, register_qubits(mask.dims)),
        noise=NoiseInfo(dephasing_p=p, phase_levels=levels, profile=str(profile_path) if profile_path else "flat"),
        measurement=MeasurementInfo.from_config(config) if config else None,
        exact_flat_trace=ComplexValue.from_complex(exact),
        analytic=EstimateInfo.from_estimate(analytic),
        monte_carlo=EstimateInfo.from_estimate(estimate) if estimate else None,
        timing=finish_timing(started_at),
    )
    write_report(report, report_path)
    console.print(f"[green]✅ Report written to {report_path}[/green]")


@main.command()
@click.argument(
    "mask_path",
    type=click.Path(dir_okay=False, path_type=Path),
    required=False,
)
@click.option(
    "--oracle",
    type=click.Choice([v.value for v in Verdict]),
    default=None,
    help="Generate the oracle instead of loading MASK_PATH",
)
@click.option("--dims", type=DIMS, default=None, help="Panel WxH for a generated oracle")
@click.option(
    "--cells",
    type=click.IntRange(min=1),
    default=1,
    show_default=True,
    help="Cell edge of a generated balanced oracle",
)
@click.option(
    "--oracle-seed",
    type=click.IntRange(min=0),
    default=0,
    show_default=True,
    help="Placement seed of a generated balanced oracle",
)
@click.option(
    "--profile",
    "profile_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="IPROF1 beam profile (default: flat)",
)
@click.option(
    "--p",
    "p",
    type=click.FloatRange(0.0, 0.5),
    default=None,
    help="Dephasing parameter (default: from config)",
)
@click.option(
    "--photons",
    type=click.IntRange(min=1),
    default=None,
    help="Photons in the sigma_x basis (default: from config)",
)
@click.option(
    "--seed",
    type=click.IntRange(min=0),
    default=None,
    help="Monte Carlo seed (default: from config)",
)
@click.option(
    "--mode",
    type=click.Choice(SAMPLING_MODES),
    default=None,
    help="Sampling mode (default: from config)",
)
@click.option(
    "--threshold",
    type=float,
    default=None,
    help="Decision threshold (default: (1-2p)/2)",
)
@click.option(
    "--analytic",
    is_flag=True,
    help="Use the exact statistic instead of simulated photons",
)
@click.option(
    "--report",
    "report_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Also write a JSON report",
)
@click.pass_context
@guarded
def dj(
    ctx,
    mask_path: Optional[Path],
    oracle: Optional[str],
    dims: Optional[PanelDims],
    cells: int,
    oracle_seed: int,
    profile_path: Optional[Path],
    p: Optional[float],
    photons: Optional[int],
    seed: Optional[int],
    mode: Optional[str],
    threshold: Optional[float],
    analytic: bool,
    report_path: Optional[Path],
):
    """
    Deutsch-Jozsa test: is the {0, pi} oracle mask constant or balanced?

    Prints 'VERDICT <verdict> statistic=<v> threshold=<t>'; exits 0 for any verdict.

    Examples:
        dqc1slm dj minus.pmask
        dqc1slm dj --oracle balanced --cells 10 --oracle-seed 42 --photons 100000
    """
    started_at = start_timing()
    threads = ctx.obj["threads"]
    p = _default_p(p)

    if (mask_path is None) == (oracle is None):
        raise click.UsageError("give either MASK_PATH or --oracle", ctx=ctx)

    cell_spec = None
    if mask_path is not None:
        mask = load_mask(mask_path)
    else:
        cell_spec = CellSpec.square(cells)
        mask = make_oracle(oracle, _default_dims(dims), cell_spec, oracle_seed)

    profile = load_profile(profile_path) if profile_path else flat(mask.dims)
    config = None
    if not analytic:
        config = _measurement_config(photons or get_simulation_config().measurement.photons_per_basis, seed, mode)

    verdict = run_dj(mask, profile, p, config, threshold=threshold, analytic=analytic, threads=threads)

    click.echo(f"VERDICT {verdict.verdict.value} statistic={verdict.statistic!r} threshold={verdict.threshold!r}")
    style = "green" if verdict.is_constant else "yellow"
    console.print(
        Panel(
            f"<σx> = {_fmt(verdict.statistic, verdict.stderr)}\n"
            f"threshold ± {verdict.threshold:.4f}\n"
            f"photons: {verdict.photons_used:,}",
            title=f"[{style}]{verdict.verdict.value}[/{style}]",
            box=box.ROUNDED,
        )
    )

    if report_path is not None:
        report = RunReport(
            command="dj",
            parameters=echo_parameters(ctx.params),
            inputs=digest_inputs({"mask": mask_path, "profile": profile_path}),
            panel=PanelInfo.from_dims(mask.dims, register_qubits(mask.dims, cell_spec)),
            noise=NoiseInfo(dephasing_p=p, profile=str(profile_path) if profile_path else "flat"),
            measurement=MeasurementInfo.from_config(config) if config else None,
            oracle=VerdictInfo.from_verdict(verdict),
            timing=finish_timing(started_at),
        )
        write_report(report, report_path)


def _parse_cell_list(ctx, param, value: Optional[str]) -> Optional[List[int]]:
    if value is None:
        return None
    try:
        sizes = [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter("cell sizes must be comma-separated integers", ctx=ctx, param=param)
    if not sizes or min(sizes) < 1:
        raise click.BadParameter("cell sizes must be positive", ctx=ctx, param=param)
    return sizes


@main.command()
@click.option(
    "--cells",
    "cell_sizes",
    callback=_parse_cell_list,
    default=None,
    help="Comma-separated cell edges, e.g. 1,5,10 (default: from config)",
)
@click.option(
    "--trials",
    type=click.IntRange(min=0),
    default=None,
    help="Random oracles per cell size (default: from config)",
)
@click.option(
    "--dims",
    type=DIMS,
    default=None,
    help="Panel WxH (default: from config or the profile)",
)
@click.option(
    "--profile",
    "profile_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="IPROF1 beam profile (default: flat)",
)
@click.option(
    "--p",
    "p",
    type=click.FloatRange(0.0, 0.5),
    default=None,
    help="Dephasing parameter (default: from config)",
)
@click.option(
    "--photons",
    type=click.IntRange(min=1),
    default=None,
    help="Photons per trial (default: from config)",
)
@click.option(
    "--seed",
    type=click.IntRange(min=0),
    default=None,
    help="Master seed (default: from config)",
)
@click.option(
    "--mode",
    type=click.Choice(SAMPLING_MODES),
    default=None,
    help="Sampling mode (default: from config)",
)
@click.option(
    "--threshold",
    type=float,
    default=None,
    help="Decision threshold (default: (1-2p)/2)",
)
@click.option("--analytic", is_flag=True, help="Exact statistic, no shot noise")
@click.option(
    "--out",
    "out_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=Path("sweep.csv"),
    show_default=True,
)
@click.pass_context
@guarded
def sweep(
    ctx,
    cell_sizes: Optional[List[int]],
    trials: Optional[int],
    dims: Optional[PanelDims],
    profile_path: Optional[Path],
    p: Optional[float],
    photons: Optional[int],
    seed: Optional[int],
    mode: Optional[str],
    threshold: Optional[float],
    analytic: bool,
    out_path: Path,
):
    """
    Cell-size sweep of random balanced oracles, written as CSV.

    Example:
        dqc1slm sweep --cells 1,5,10 --trials 100 --out sweep.csv
    """
    cell_sizes = [cells.cell_width for cells in CellFactory.create_sweep_cells(cell_sizes)]
    trials = get_simulation_config().oracle.sweep_trials if trials is None else trials
    p = _default_p(p)

    profile = load_profile(profile_path) if profile_path else flat(_default_dims(dims))
    config = _measurement_config(photons or get_simulation_config().measurement.photons_per_basis, seed, mode)

    console.print(f"[blue]🔬 Sweeping cell sizes {cell_sizes} with {trials} trial(s) each on {profile.dims}[/blue]")
    frame = resolution_sweep(
        cell_sizes, trials, profile, p, config, threshold=threshold, analytic=analytic, threads=ctx.obj["threads"]
    )
    frame.to_csv(out_path, index=False, lineterminator="\n")

    summary = summarize_sweep(frame)
    table = Table(title="Resolution sweep", box=box.ROUNDED)
    table.add_column("Cell", style="cyan", justify="right")
    table.add_column("Trials", justify="right")
    table.add_column("Mean <σx>", justify="right")
    table.add_column("Std", justify="right")
    table.add_column("Misclassified", justify="right")
    for row in summary.itertuples(index=False):
        misses = int(row.misclassified)
        table.add_row(
            f"{row.cell_size}x{row.cell_size}",
            str(row.trials),
            f"{row.mean:+.5f}",
            "n/a" if pd.isna(row.std) else f"{row.std:.5f}",
            f"[red]{misses}[/red]" if misses else "0",
        )
    console.print(table)
    console.print(f"[green]✅ Wrote {len(frame)} rows to {out_path}[/green]")


@main.command("ingest-beam")
@click.argument("counts_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--dims", type=DIMS, default=None, help="Panel WxH (default: from config)")
@click.option(
    "--out",
    "out_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=Path("profile.iprof"),
    show_default=True,
)
@click.pass_context
@guarded
def ingest_beam(ctx, counts_path: Path, dims: Optional[PanelDims], out_path: Path):
    """
    Convert a CGRID1 coincidence-count grid into an IPROF1 profile.

    Example:
        dqc1slm ingest-beam scan.cgrid --dims 1920x1920 --out beam.iprof
    """
    dims = _default_dims(dims)
    grid = load_counts(counts_path)
    beam_cell = CellFactory.create_beam_cell()
    if grid.cell_size != beam_cell.cell_width:
        logger.warning(f"{counts_path} uses {grid.cell_size} px cells, configured beam cell is {beam_cell}")
    profile = from_counts(grid, dims)
    save_profile(profile, out_path)

    residual = compensated_sum(profile.weights) - 1.0
    masses = cell_masses(profile, grid.cell_size)
    console.print(f"[green]✅ Ingested {grid.cells_x}x{grid.cells_y} cells onto {dims} -> {out_path}[/green]")
    console.print(f"unit-sum residual: {residual:+.3e}")
    console.print(f"[dim]cell mass range: {masses.min():.6g} .. {masses.max():.6g}[/dim]")


@main.command("ramp-benchmark")
@click.option("--dims", type=DIMS, default=None, help="Panel WxH (default: from config)")
@click.option(
    "--profile",
    "profile_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="IPROF1 beam profile",
)
@click.option(
    "--counts",
    "counts_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="CGRID1 counts (profile source and Poisson term)",
)
@click.option(
    "--p",
    "p",
    type=click.FloatRange(0.0, 0.5),
    default=None,
    help="Dephasing parameter (default: from config)",
)
@click.option(
    "--levels",
    type=click.IntRange(min=2),
    default=None,
    help="Phase levels (default: from config)",
)
@click.option(
    "--photons",
    type=click.IntRange(min=1),
    default=None,
    help="Photons per basis for a Monte Carlo column",
)
@click.option(
    "--seed",
    type=click.IntRange(min=0),
    default=None,
    help="Monte Carlo seed (default: from config)",
)
@click.option(
    "--mode",
    type=click.Choice(SAMPLING_MODES),
    default=None,
    help="Sampling mode (default: from config)",
)
@click.option(
    "--out",
    "out_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Also write the table as CSV",
)
@click.pass_context
@guarded
def ramp_benchmark(
    ctx,
    dims: Optional[PanelDims],
    profile_path: Optional[Path],
    counts_path: Optional[Path],
    p: Optional[float],
    levels: Optional[int],
    photons: Optional[int],
    seed: Optional[int],
    mode: Optional[str],
    out_path: Optional[Path],
):
    """
    Normalized traces of the four reference linear ramps.

    Shows exact, analytic (with systematics) and optional Monte Carlo values
    next to their reference values.

    Example:
        dqc1slm ramp-benchmark --photons 100000 --out ramps.csv
    """
    threads = ctx.obj["threads"]
    p = _default_p(p)
    levels = levels or get_simulation_config().noise.phase_levels
    counts = load_counts(counts_path) if counts_path is not None else None
    if dims is None and counts is not None:
        dims = counts.covered_dims
    profile = _resolve_profile(profile_path, counts, _default_dims(dims))
    dims = profile.dims
    config = _measurement_config(photons, seed, mode) if photons else None

    rows = []
    for ramp in RampFactory.create_reference_ramps():
        mask = make_linear_ramp(dims, ramp.phi_start, ramp.phi_end)
        exact = exact_normalized_trace(mask, threads=threads)
        analytic = analytic_trace(mask, profile, p, levels=levels, counts=counts, threads=threads)
        row = {
            "ramp": ramp.label,
            "exact_re": exact.real,
            "exact_im": exact.imag,
            "reference_re": ramp.reference_re,
            "reference_im": ramp.reference_im,
            "analytic_re": analytic.re,
            "analytic_im": analytic.im,
            "sys_err_re": analytic.sys_err_re,
            "sys_err_im": analytic.sys_err_im,
        }
        if config is not None:
            estimate = monte_carlo_trace(mask, profile, p, config, threads=threads)
            row.update(
                mc_re=estimate.re, mc_im=estimate.im, stat_err_re=estimate.stat_err_re, stat_err_im=estimate.stat_err_im
            )
        rows.append(row)

    table = Table(title=f"Reference ramps on {dims} (p={p}, {levels} levels)", box=box.ROUNDED)
    table.add_column("Ramp", style="cyan")
    table.add_column("Exact", justify="right")
    table.add_column("Reference", style="dim", justify="right")
    table.add_column("Analytic Re", justify="right")
    table.add_column("Analytic Im", justify="right")
    if config is not None:
        table.add_column("MC Re", justify="right")
        table.add_column("MC Im", justify="right")
    for row in rows:
        cells = [
            row["ramp"],
            f"({row['exact_re']:+.3f}, {row['exact_im']:+.3f})",
            f"({row['reference_re']:+.3f}, {row['reference_im']:+.3f})",
            _fmt(row["analytic_re"], row["sys_err_re"]),
            _fmt(row["analytic_im"], row["sys_err_im"]),
        ]
        if config is not None:
            cells += [_fmt(row["mc_re"], row["stat_err_re"]), _fmt(row["mc_im"], row["stat_err_im"])]
        table.add_row(*cells)
    console.print(table)

    if out_path is not None:
        pd.DataFrame(rows).to_csv(out_path, index=False, lineterminator="\n")
        console.print(f"[green]✅ Wrote {len(rows)} rows to {out_path}[/green]")


@main.command("report-schema")
@click.option(
    "--out",
    "out_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write to a file instead of stdout",
)
@guarded
def report_schema(out_path: Optional[Path]):
    """
    Publish the JSON schema that run reports validate against.

    Example:
        dqc1slm report-schema --out run_report.schema.json
    """
    if out_path is None:
        click.echo(json.dumps(build_report_schema(), indent=2, sort_keys=True))
        return
    write_report_schema(out_path)
    console.print(f"[green]✅ Wrote report schema to {out_path}[/green]")


if __name__ == "__main__":
    main()
