"""
One-step operators: monotone step, high-order Euler stage, RK2 composition and
the filtered combination of a monotone and a high-order step.

All operators map a Field at time t to a Field at time t + tau and re-apply the
boundary condition on the physical boundary nodes. None of them raises on
non-finite values; callers check ``Field.diverged`` or ``Field.check_finite``.
"""

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional, Tuple, Union

import numpy as np

from hjfilter.hamiltonians.analytic import AnalyticHamiltonian
from hjfilter.hamiltonians.monotone import MonotoneHamiltonian1D, MonotoneHamiltonian2D
from hjfilter.hamiltonians.reconstruction import (
    DerivativePair,
    centered_derivative,
    eno2_derivatives,
    one_sided_derivatives,
    project_derivative,
)
from hjfilter.mesh.boundary import BoundaryCondition, fill_ghosts
from hjfilter.mesh.field import Field
from hjfilter.mesh.grid import GHOST_WIDTH, Grid1D
from hjfilter.schemes.filters import FilterFunction, filter_argument

StepOperator = Callable[[Field], Field]
MonotoneHamiltonian = Union[MonotoneHamiltonian1D, MonotoneHamiltonian2D]

HIGH_ORDER_KINDS = ("centered", "eno2")


class Projection(NamedTuple):
    """Band M*dx around the first-order difference for ENO2 derivatives."""
    
    M: float
    mode: str = "clamp"


@dataclass(frozen=True)
class StepReport:
    """Switching diagnostics of one filtered step."""
    
    used_high_order_fraction: float
    max_filter_argument: float


def _extended(u: Field, bc: BoundaryCondition) -> np.ndarray:
    return fill_ghosts(u.values, bc, GHOST_WIDTH, t=u.t, grid=u.grid)


def _advance(u: Field, values: np.ndarray, bc: BoundaryCondition, tau: float) -> Field:
    t_next = u.t + tau
    return u.with_values(bc.enforce(values, u.grid, t_next), t=t_next)


def _project_pair(ext, dx, pair: DerivativePair, projection: Projection, axis: int):
    first = one_sided_derivatives(ext, dx, GHOST_WIDTH, axis)
    band = projection.M * dx
    return DerivativePair(
        minus=project_derivative(first.minus, band, pair.minus, projection.mode),
        plus=project_derivative(first.plus, band, pair.plus, projection.mode),
    )


def _eno2_pair(ext, dx, axis: int, projection: Optional[Projection]) -> DerivativePair:
    pair = eno2_derivatives(ext, dx, GHOST_WIDTH, axis)
    if projection is not None:
        pair = _project_pair(ext, dx, pair, projection, axis)
    return pair


def monotone_step(
    u: Field, h: MonotoneHamiltonian, tau: float, bc: BoundaryCondition
) -> Field:
    """
    u_j - tau * h^M(x_j, D-u_j, D+u_j) (and its 2D analogue).
    
    Args:
        u: Field at time t
        h: Monotone numerical Hamiltonian matching the grid dimension
        tau: Time step (the CFL condition is the caller's responsibility)
        bc: Boundary condition used for ghost values
        
    Returns:
        Field at time t + tau
    """
    ext = _extended(u, bc)
    grid = u.grid
    with np.errstate(over="ignore", invalid="ignore"):
        if isinstance(grid, Grid1D):
            d = one_sided_derivatives(ext, grid.dx)
            flux = h(grid.nodes, d.minus, d.plus)
        else:
            dxp = one_sided_derivatives(ext, grid.dx, axis=0)
            dyp = one_sided_derivatives(ext, grid.dy, axis=1)
            X, Y = grid.mesh()
            flux = h(X, Y, dxp.minus, dxp.plus, dyp.minus, dyp.plus)
        values = u.values - tau * flux
    return _advance(u, values, bc, tau)


def high_order_euler_step(
    u: Field,
    H: AnalyticHamiltonian,
    variant: str,
    tau: float,
    bc: BoundaryCondition,
    h: Optional[MonotoneHamiltonian] = None,
    projection: Optional[Projection] = None,
) -> Field:
    """
    Forward Euler stage S0 of the high-order scheme.
    
    "centered" evaluates H on (u_{j+1} - u_{j-1})/(2dx); "eno2" evaluates the
    monotone flux ``h`` on ENO2 derivatives, optionally projected into a band
    around the first-order differences.
    
    Raises:
        ValueError: If the variant is unknown, h is missing for eno2, or a
            projection is requested for the centered variant
    """
    if variant not in HIGH_ORDER_KINDS:
        raise ValueError(f"Unknown high-order variant '{variant}'. Available: {list(HIGH_ORDER_KINDS)}")
    if variant == "eno2" and h is None:
        raise ValueError("ENO2 stage needs a monotone Hamiltonian h")
    if variant == "centered" and projection is not None:
        raise ValueError("Derivative projection applies to the eno2 variant only")
    
    ext = _extended(u, bc)
    grid = u.grid
    with np.errstate(over="ignore", invalid="ignore"):
        if isinstance(grid, Grid1D):
            x = grid.nodes
            if variant == "centered":
                rate = H(x, centered_derivative(ext, grid.dx))
            else:
                d = _eno2_pair(ext, grid.dx, 0, projection)
                rate = h(x, d.minus, d.plus)
        else:
            X, Y = grid.mesh()
            if variant == "centered":
                rate = H(
                    X,
                    Y,
                    centered_derivative(ext, grid.dx, axis=0),
                    centered_derivative(ext, grid.dy, axis=1),
                )
            else:
                dxp = _eno2_pair(ext, grid.dx, 0, projection)
                dyp = _eno2_pair(ext, grid.dy, 1, projection)
                rate = h(X, Y, dxp.minus, dxp.plus, dyp.minus, dyp.plus)
        values = u.values - tau * rate
    return _advance(u, values, bc, tau)


def rk2_compose(S0: StepOperator, u: Field) -> Field:
    """Heun composition S^A(u) = (u + S0(S0(u))) / 2."""
    first = S0(u)
    second = S0(first)
    with np.errstate(over="ignore", invalid="ignore"):
        values = 0.5 * (u.values + second.values)
    return u.with_values(values, t=first.t)


def filtered_step(
    u: Field,
    SM: StepOperator,
    SA: StepOperator,
    F: FilterFunction,
    eps: float,
    tau: float,
) -> Tuple[Field, StepReport]:
    """
    S^F(u) = S^M(u) + eps*tau * F((S^A(u) - S^M(u)) / (eps*tau)).
    
    Args:
        u: Field at time t
        SM: Monotone one-step operator
        SA: High-order one-step operator
        F: Filter function
        eps: Switching parameter (> 0)
        tau: Time step (> 0)
        
    Returns:
        Tuple of (filtered Field, StepReport)
    """
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")
    if not tau > 0:
        raise ValueError(f"tau must be positive, got {tau}")
    
    sm = SM(u)
    sa = SA(u)
    eps_tau = eps * tau
    ratio = filter_argument(sm.values, sa.values, eps_tau)
    values = F.blend(sm.values, sa.values, eps_tau)
    report = StepReport(
        used_high_order_fraction=float(np.mean(np.abs(ratio) <= 1.0)),
        max_filter_argument=float(np.max(np.abs(ratio))),
    )
    return sm.with_values(values), report
