"""
Scheme assembly and time marching.

A scheme variant names how the monotone and high-order operators are
combined:
    monotone            S^M with the problem's h^M
    centered, eno2      RK2 high-order scheme alone
    filtered-centered   S^F with centered RK2 as S^A
    filtered-eno2       S^F with ENO2 RK2 as S^A
    sl                  semi-Lagrangian S^M
    filtered-sl         S^F with the semi-Lagrangian S^M and centered RK2 as S^A
"""

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, List, Optional

import numpy as np

from hjfilter.mesh.field import Field
from hjfilter.mesh.grid import Grid, Grid1D, TimeGrid
from hjfilter.schemes.epsilon import EpsilonRule, compute_epsilon
from hjfilter.schemes.filters import FilterFunction, NewFilter
from hjfilter.schemes.limiters import (
    limit_high_order_step,
    limiter_clamp_2d,
    validate_limiter,
)
from hjfilter.schemes.obstacle import obstacle_step, obstacle_values
from hjfilter.schemes.semi_lagrangian import sl_monotone_step
from hjfilter.schemes.steady import DEFAULT_MAX_ITERATIONS, DEFAULT_TOL, steady_solve
from hjfilter.schemes.steps import (
    Projection,
    StepReport,
    filtered_step,
    high_order_euler_step,
    monotone_step,
    rk2_compose,
)
from hjfilter.utils.console import report

if TYPE_CHECKING:
    from hjfilter.problems.base import Problem

VARIANTS = (
    "monotone",
    "centered",
    "eno2",
    "filtered-centered",
    "filtered-eno2",
    "sl",
    "filtered-sl",
)

# Iterates larger than this multiple of max(1, |u0|) count as diverged.
GROWTH_FACTOR = 1e6


@dataclass(frozen=True)
class SchemeConfig:
    """
    Filter, switching parameter, limiter and optional ENO2 projection.
    
    ``limiter=None`` and ``epsilon=None`` defer to the problem defaults.
    """
    
    filter: FilterFunction = field(default_factory=NewFilter)
    epsilon: Optional[EpsilonRule] = None
    limiter: Optional[str] = None
    projection: Optional[Projection] = None
    tol: float = DEFAULT_TOL
    n_max: int = DEFAULT_MAX_ITERATIONS
    
    def resolve(self, problem: "Problem") -> "SchemeConfig":
        """Fill unset fields from the problem and validate the limiter."""
        limiter = problem.limiter if self.limiter is None else self.limiter
        validate_limiter(limiter, problem.dim)
        return SchemeConfig(
            filter=self.filter,
            epsilon=problem.epsilon if self.epsilon is None else self.epsilon,
            limiter=limiter,
            projection=self.projection,
            tol=self.tol,
            n_max=self.n_max,
        )


def validate_variant(variant: str, problem: "Problem") -> str:
    """Check the variant name against the problem's dimension and data."""
    if variant not in VARIANTS:
        raise ValueError(f"Unknown scheme '{variant}'. Available: {list(VARIANTS)}")
    if variant.endswith("sl"):
        if problem.dim != 1:
            raise ValueError(f"Scheme '{variant}' is available for 1D problems only")
        if problem.control is None:
            raise ValueError(f"Problem '{problem.key}' has no control model for scheme '{variant}'")
    return variant


class Stepper:
    """
    One time step of a scheme variant on a fixed grid and time step.
    
    Calling the stepper advances a Field by tau. The switching diagnostics of
    the last filtered step are kept in ``last_report``.
    """
    
    def __init__(
        self,
        problem: "Problem",
        variant: str,
        grid: Grid,
        tau: float,
        config: SchemeConfig,
    ):
        self.problem = problem
        self.variant = validate_variant(variant, problem)
        self.grid = grid
        self.tau = tau
        self.config = config.resolve(problem)
        self.eps = compute_epsilon(self.config.epsilon, max(_spacings(grid)))
        self.filtered = variant.startswith("filtered-")
        self.last_report: Optional[StepReport] = None
        
        self._kind = "eno2" if variant.endswith("eno2") else "centered"
        self._obstacle = None
        if problem.obstacle is not None:
            self._obstacle = obstacle_values(grid, problem.obstacle)
        self._velocities = None
        if self.filtered and self.config.limiter == "extrema1d":
            self._velocities = problem.velocities(grid.nodes)
    
    def monotone(self, u: Field) -> Field:
        """S^M(u)."""
        if self.variant.endswith("sl"):
            return sl_monotone_step(u, self.problem.control, self.tau, self.problem.bc)
        return monotone_step(u, self.problem.hM, self.tau, self.problem.bc)
    
    def euler(self, u: Field) -> Field:
        """High-order Euler stage S0(u)."""
        return high_order_euler_step(
            u,
            self.problem.H,
            self._kind,
            self.tau,
            self.problem.bc,
            h=self.problem.hM,
            projection=self.config.projection,
        )
    
    def high_order(self, u: Field) -> Field:
        """S^A(u) = RK2 composition of the Euler stage."""
        return rk2_compose(self.euler, u)
    
    def limited_high_order(self, u: Field) -> Field:
        """S^A(u) after the configured limiter."""
        sa = self.high_order(u)
        if self.config.limiter == "extrema1d":
            return limit_high_order_step(u, sa, self._velocities, self.tau, self.problem.bc)
        if self.config.limiter == "clamp2d":
            return limiter_clamp_2d(u, sa, self.problem.bc)
        return sa
    
    def step(self, u: Field) -> Field:
        """The scheme step without the obstacle."""
        if self.filtered:
            out, self.last_report = filtered_step(
                u,
                self.monotone,
                self.limited_high_order,
                self.config.filter,
                self.eps,
                self.tau,
            )
        elif self.variant in ("monotone", "sl"):
            out = self.monotone(u)
        else:
            out = self.high_order(u)
        return out
    
    def __call__(self, u: Field) -> Field:
        if self._obstacle is None:
            return self.step(u)
        return obstacle_step(self.step, u, self._obstacle)


def divergence_bound(u0: Field) -> float:
    """Magnitude above which an iterate started from ``u0`` is treated as a blow-up."""
    return GROWTH_FACTOR * max(1.0, float(np.max(np.abs(u0.values))))


def _spacings(grid: Grid):
    if isinstance(grid, Grid1D):
        return (grid.dx,)
    return (grid.dx, grid.dy)


def build_stepper(
    problem: "Problem",
    variant: str,
    grid: Grid,
    tau: float,
    config: Optional[SchemeConfig] = None,
) -> Stepper:
    """
    Assemble the one-step operator of a scheme variant.
    
    Args:
        problem: Problem descriptor
        variant: One of VARIANTS
        grid: Grid built by ``problem.build_grid``
        tau: Time step
        config: Scheme options (problem defaults when omitted)
        
    Returns:
        Stepper
    """
    if not tau > 0:
        raise ValueError(f"tau must be positive, got {tau}")
    return Stepper(problem, variant, grid, tau, config or SchemeConfig())


@dataclass
class RunResult:
    """Final field of one run and its discretisation parameters."""
    
    problem: str
    variant: str
    M: int
    field: Field
    steps: int
    tau: float
    eps: float
    high_order_fraction: Optional[float] = None
    converged: Optional[bool] = None
    residual: Optional[float] = None
    
    @property
    def grid(self) -> Grid:
        return self.field.grid


def evolve(
    problem: "Problem",
    variant: str,
    M: int,
    config: Optional[SchemeConfig] = None,
    cfl: Optional[float] = None,
) -> RunResult:
    """
    Run a scheme variant on an M-cell grid to the final time (or to a steady state).
    
    Args:
        problem: Problem descriptor
        variant: Scheme variant
        M: Cells per axis
        config: Scheme options
        cfl: CFL number overriding the problem default
        
    Returns:
        RunResult
        
    Raises:
        SchemeDivergence: If a step produces non-finite values or grows past
            ``divergence_bound``
    """
    grid = problem.build_grid(M)
    tau_max = problem.tau_max(grid, cfl)
    u = Field.from_function(grid, problem.v0)
    if problem.obstacle is not None:
        u = u.with_values(np.maximum(u.values, obstacle_values(grid, problem.obstacle)))
    bound = divergence_bound(u)
    
    if problem.steady:
        stepper = build_stepper(problem, variant, grid, tau_max, config)
        with np.errstate(over="ignore", invalid="ignore"):
            result = steady_solve(
                stepper,
                u,
                stepper.config.tol,
                stepper.config.n_max,
                scale=tau_max,
                bound=bound,
            )
        if not result.converged:
            report(
                f"  {problem.key}/{variant} M={M}: not converged after {result.iterations} "
                f"iterations (residual {result.residual:.2e})"
            )
        return RunResult(
            problem=problem.key,
            variant=variant,
            M=M,
            field=result.field,
            steps=result.iterations,
            tau=tau_max,
            eps=stepper.eps,
            high_order_fraction=_fraction(stepper),
            converged=result.converged,
            residual=result.residual,
        )
    
    if problem.T == 0:
        stepper = build_stepper(problem, variant, grid, tau_max, config)
        return RunResult(problem.key, variant, M, u, 0, tau_max, stepper.eps)
    
    time_grid = TimeGrid.from_step(problem.T, tau_max)
    stepper = build_stepper(problem, variant, grid, time_grid.tau, config)
    fractions: List[float] = []
    with np.errstate(over="ignore", invalid="ignore"):
        for n in range(1, time_grid.N + 1):
            u = stepper(u).check_finite(step=n, bound=bound)
            if stepper.last_report is not None:
                fractions.append(stepper.last_report.used_high_order_fraction)
    u = u.with_values(u.values, t=problem.T)
    return RunResult(
        problem=problem.key,
        variant=variant,
        M=M,
        field=u,
        steps=time_grid.N,
        tau=time_grid.tau,
        eps=stepper.eps,
        high_order_fraction=float(np.mean(fractions)) if fractions else None,
    )


def _fraction(stepper: Stepper) -> Optional[float]:
    if stepper.last_report is None:
        return None
    return stepper.last_report.used_high_order_fraction
