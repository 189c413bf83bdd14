"""
Refinement studies and convergence orders.
"""

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

import pandas as pd

from hjfilter.analysis.norms import error_norms
from hjfilter.mesh.field import SchemeDivergence
from hjfilter.mesh.grid import TimeGrid
from hjfilter.problems.base import Problem
from hjfilter.schemes.solver import RunResult, SchemeConfig, evolve
from hjfilter.utils.console import report


@dataclass(frozen=True)
class ConvergenceRow:
    """One refinement level: cells M, steps N, error and order against the previous row."""
    
    M: int
    N: int
    error: float
    order: Optional[float] = None
    diverged: bool = False
    high_order_fraction: Optional[float] = None


def convergence_order(coarse_error: float, fine_error: float) -> Optional[float]:
    """
    log2(coarse/fine) for a halved mesh step.
    
    Returns None when either error is non-finite or non-positive.
    
    Example:
        >>> convergence_order(0.04, 0.01)
        2.0
    """
    if not (math.isfinite(coarse_error) and math.isfinite(fine_error)):
        return None
    if coarse_error <= 0 or fine_error <= 0:
        return None
    return math.log2(coarse_error / fine_error)


def validate_levels(levels: Sequence[int]) -> List[int]:
    """Check that each level doubles the previous one."""
    levels = [int(m) for m in levels]
    if not levels:
        raise ValueError("At least one refinement level is required")
    for coarse, fine in zip(levels, levels[1:]):
        if fine != 2 * coarse:
            raise ValueError(f"Levels must double at each step, got {coarse} -> {fine}")
    return levels


def _planned_steps(problem: Problem, M: int, cfl: Optional[float]) -> int:
    if problem.steady or problem.T == 0:
        return 0
    grid = problem.build_grid(M)
    return TimeGrid.from_step(problem.T, problem.tau_max(grid, cfl)).N


def refinement_study(
    problem: Problem,
    variant: str,
    levels: Sequence[int],
    config: Optional[SchemeConfig] = None,
    cfl: Optional[float] = None,
    norm: Optional[str] = None,
    on_run: Optional[Callable[[RunResult], None]] = None,
) -> List[ConvergenceRow]:
    """
    Run one scheme on successively halved meshes.
    
    A level whose run diverges gives a NaN row; the study always continues.
    
    Args:
        problem: Problem descriptor
        variant: Scheme variant
        levels: Cells per axis, each double the previous
        config: Scheme options
        cfl: CFL override
        norm: Norm override ("l1", "l2", "linf"); defaults to the problem's norm
        on_run: Called with each completed RunResult
        
    Returns:
        One ConvergenceRow per level
    """
    levels = validate_levels(levels)
    norm = norm or problem.norm
    rows: List[ConvergenceRow] = []
    previous: Optional[float] = None
    
    for M in levels:
        try:
            result = evolve(problem, variant, M, config=config, cfl=cfl)
        except SchemeDivergence as exc:
            steps = exc.step if problem.steady and exc.step is not None else _planned_steps(problem, M, cfl)
            report(f"  {problem.key}/{variant} M={M}: diverged ({exc})")
            rows.append(ConvergenceRow(M=M, N=steps, error=math.nan, diverged=True))
            previous = math.nan
            continue
        
        grid = result.grid
        norms = error_norms(
            result.field,
            problem.exact_values(grid, result.field.t),
            mask=problem.error_mask(grid),
        )
        error = norms.pick(norm)
        order = None if previous is None else convergence_order(previous, error)
        rows.append(
            ConvergenceRow(
                M=M,
                N=result.steps,
                error=error,
                order=order,
                high_order_fraction=result.high_order_fraction,
            )
        )
        previous = error
        order_text = "-" if order is None else f"{order:.2f}"
        report(f"  {problem.key}/{variant} M={M} N={result.steps} {norm}={error:.3e} order={order_text}")
        if on_run is not None:
            on_run(result)
    
    return rows


def rows_to_frame(rows_by_scheme: Dict[str, List[ConvergenceRow]]) -> pd.DataFrame:
    """
    Collate per-scheme rows into one table indexed by M.
    
    Columns are M, N, then error_<scheme> and order_<scheme> for each scheme.
    When the step counts differ between schemes (e.g. iteration counts of a
    steady problem) N is left empty and N_<scheme> columns are added.
    """
    if not rows_by_scheme:
        raise ValueError("No scheme rows to collate")
    schemes = list(rows_by_scheme.keys())
    levels = [row.M for row in rows_by_scheme[schemes[0]]]
    for scheme in schemes[1:]:
        if [row.M for row in rows_by_scheme[scheme]] != levels:
            raise ValueError(f"Scheme '{scheme}' was run on different levels")
    
    step_columns = {scheme: [row.N for row in rows_by_scheme[scheme]] for scheme in schemes}
    shared_steps = all(steps == step_columns[schemes[0]] for steps in step_columns.values())
    
    frame = pd.DataFrame({"M": levels})
    frame["N"] = step_columns[schemes[0]] if shared_steps else None
    for scheme in schemes:
        rows = rows_by_scheme[scheme]
        frame[f"error_{scheme}"] = [row.error for row in rows]
        frame[f"order_{scheme}"] = [row.order for row in rows]
        if not shared_steps:
            frame[f"N_{scheme}"] = step_columns[scheme]
    return frame
