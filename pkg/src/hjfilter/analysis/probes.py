"""
Empirical consistency orders of scheme operators on smooth solutions.

The spatial order is measured on the operator error of one stage,
|(v - S(v))/tau - H(x, v_x)|, which does not depend on tau for the monotone and
Euler stages. The temporal order is measured on the full step against the exact
solution, on a spatial grid fine enough for the spatial error to be negligible.
"""

from dataclasses import dataclass, replace
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from hjfilter.mesh.boundary import Dirichlet
from hjfilter.mesh.field import Field
from hjfilter.mesh.grid import build_grid_1d
from hjfilter.problems.base import Problem
from hjfilter.schemes.solver import SchemeConfig, build_stepper
from hjfilter.utils.console import report

MIN_PROBE_LEVELS = 4
MIN_R_SQUARED = 0.99
# nodes next to the boundary are left out of the probe
_EDGE = 3


@dataclass(frozen=True)
class SmoothSolution:
    """Exact smooth solution v(t, x) of the problem's equation, with its derivatives."""
    
    v: Callable[[float, np.ndarray], np.ndarray]
    v_x: Callable[[float, np.ndarray], np.ndarray]
    domain: Tuple[float, float] = (0.0, 1.0)
    t0: float = 0.0


def transport_solution() -> SmoothSolution:
    """
    v(t, x) = w(x - t) with w(x) = 2x + sin x.
    
    w' >= 1 keeps v_x away from the kink of |p|, so v solves v_t + |v_x| = 0.
    """
    return SmoothSolution(
        v=lambda t, x: 2.0 * (x - t) + np.sin(x - t),
        v_x=lambda t, x: 2.0 + np.cos(x - t),
    )


@dataclass(frozen=True)
class ConsistencyProbeResult:
    """Fitted orders with the raw errors they come from."""
    
    spatial_order: float
    temporal_order: float
    spatial_r2: float
    temporal_r2: float
    dx_levels: Tuple[float, ...]
    spatial_errors: Tuple[float, ...]
    tau_levels: Tuple[float, ...]
    temporal_errors: Tuple[float, ...]
    
    @property
    def good_fit(self) -> bool:
        return self.spatial_r2 >= MIN_R_SQUARED and self.temporal_r2 >= MIN_R_SQUARED


def fit_order(steps: Sequence[float], errors: Sequence[float]) -> Tuple[float, float]:
    """
    Least-squares slope of log(error) against log(step), and its R^2.
    
    Raises:
        ValueError: With fewer than four levels or non-positive errors
    """
    steps = np.asarray(steps, dtype=float)
    errors = np.asarray(errors, dtype=float)
    if steps.size < MIN_PROBE_LEVELS:
        raise ValueError(f"Order fits need at least {MIN_PROBE_LEVELS} levels, got {steps.size}")
    if np.any(~np.isfinite(errors)) or np.any(errors <= 0):
        raise ValueError(f"Order fits need positive finite errors, got {errors.tolist()}")
    log_h = np.log(steps)
    log_e = np.log(errors)
    slope, intercept = np.polyfit(log_h, log_e, 1)
    residual = log_e - (slope * log_h + intercept)
    total = np.sum(np.square(log_e - log_e.mean()))
    r2 = 1.0 - float(np.sum(np.square(residual)) / total) if total > 0 else 1.0
    return float(slope), r2


def _probe_problem(problem: Problem, solution: SmoothSolution) -> Problem:
    return replace(
        problem,
        domain=solution.domain,
        v0=lambda x: solution.v(solution.t0, x),
        bc=Dirichlet(solution.v),
        obstacle=None,
        limiter="off",
        steady=False,
        mask=None,
    )


def _stage(stepper, variant: str) -> Callable[[Field], Field]:
    if variant in ("monotone", "sl"):
        return stepper.monotone
    return stepper.euler


def consistency_probe(
    problem: Problem,
    variant: str,
    solution: SmoothSolution,
    levels: Sequence[int],
    config: Optional[SchemeConfig] = None,
    fine_M: int = 20_000,
    tau_levels: Optional[Sequence[float]] = None,
) -> ConsistencyProbeResult:
    """
    Fit spatial and temporal consistency orders of a scheme variant.
    
    Args:
        problem: Problem supplying H and h^M (1D)
        variant: Scheme variant
        solution: Smooth exact solution of the same equation
        levels: Cell counts for the spatial probe (at least four)
        config: Scheme options
        fine_M: Cells of the grid used for the temporal probe
        tau_levels: Time steps for the temporal probe (default 0.04, 0.02, 0.01, 0.005)
        
    Returns:
        ConsistencyProbeResult
    """
    if problem.dim != 1:
        raise ValueError("The consistency probe is implemented for 1D problems")
    if len(levels) < MIN_PROBE_LEVELS:
        raise ValueError(f"Probe needs at least {MIN_PROBE_LEVELS} levels, got {len(levels)}")
    tau_levels = tuple(tau_levels or (0.04, 0.02, 0.01, 0.005))
    probe = _probe_problem(problem, solution)
    t0 = solution.t0
    
    dx_levels, spatial_errors = [], []
    for M in levels:
        grid = build_grid_1d(*solution.domain, M)
        tau = probe.tau_max(grid)
        stepper = build_stepper(probe, variant, grid, tau, config)
        u = Field.from_function(grid, lambda x: solution.v(t0, x), t=t0)
        stage = _stage(stepper, variant)(u)
        x = grid.nodes
        rate = (u.values - stage.values) / tau
        residual = rate - problem.H(x, solution.v_x(t0, x))
        dx_levels.append(grid.dx)
        spatial_errors.append(float(np.max(np.abs(residual[_EDGE:-_EDGE]))))
    
    grid = build_grid_1d(*solution.domain, fine_M)
    x = grid.nodes
    temporal_errors = []
    for tau in tau_levels:
        stepper = build_stepper(probe, variant, grid, tau, config)
        u = Field.from_function(grid, lambda x: solution.v(t0, x), t=t0)
        stepped = stepper(u)
        local = np.abs(stepped.values - solution.v(t0 + tau, x)) / tau
        temporal_errors.append(float(np.max(local[_EDGE:-_EDGE])))
    
    spatial_order, spatial_r2 = fit_order(dx_levels, spatial_errors)
    temporal_order, temporal_r2 = fit_order(tau_levels, temporal_errors)
    result = ConsistencyProbeResult(
        spatial_order=spatial_order,
        temporal_order=temporal_order,
        spatial_r2=spatial_r2,
        temporal_r2=temporal_r2,
        dx_levels=tuple(dx_levels),
        spatial_errors=tuple(spatial_errors),
        tau_levels=tau_levels,
        temporal_errors=tuple(temporal_errors),
    )
    if not result.good_fit:
        report(
            f"  probe {problem.key}/{variant}: poor fit "
            f"(R^2 space {spatial_r2:.3f}, time {temporal_r2:.3f})"
        )
    return result
