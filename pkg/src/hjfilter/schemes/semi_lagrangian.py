"""
Monotone semi-Lagrangian step with P1 interpolation (1D).

S^M(u)_j = min_{a in A} max_{b in B} ( [u](x_j + tau f(x_j, a, b)) + tau l(x_j, a, b) )
"""

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from hjfilter.mesh.boundary import BoundaryCondition, Periodic, fill_ghosts
from hjfilter.mesh.field import Field
from hjfilter.mesh.grid import GHOST_WIDTH, Grid1D

# tolerance on foot points sitting exactly on the last ghost node
_FOOT_TOL = 1e-12


class FootPointOutsideDomain(ValueError):
    """A foot point x_j + tau f fell outside the ghost-extended domain."""


def _zero(x, a, b):
    return np.zeros_like(x)


@dataclass(frozen=True)
class ControlModel:
    """
    Dynamics f(x, a, b) and running cost l(x, a, b) over finite control sets.
    
    The step minimises over A and maximises over B; single-player problems
    leave B = (0.0,).
    """
    
    f: Callable[[np.ndarray, float, float], np.ndarray]
    ell: Callable[[np.ndarray, float, float], np.ndarray] = _zero
    A: Sequence[float] = (0.0,)
    B: Sequence[float] = (0.0,)
    
    def __post_init__(self):
        if len(self.A) == 0 or len(self.B) == 0:
            raise ValueError("Control sets A and B must be non-empty")
    
    def max_speed(self, x: np.ndarray) -> float:
        """sup |f| over the nodes and the control sets."""
        return max(
            float(np.max(np.abs(np.broadcast_to(self.f(x, a, b), np.shape(x)))))
            for a in self.A
            for b in self.B
        )


def uniform_controls(low: float, high: float, count: int) -> tuple:
    """``count`` equispaced controls on [low, high] (endpoints included)."""
    if count < 2:
        raise ValueError(f"count must be >= 2, got {count}")
    return tuple(np.linspace(low, high, count).tolist())


def interpolate_p1(u: Field, points: np.ndarray, bc: BoundaryCondition) -> np.ndarray:
    """
    Piecewise-linear interpolant [u] evaluated at ``points``.
    
    Periodic grids wrap the points; Dirichlet grids interpolate over the
    ghost-extended nodes.
    
    Raises:
        FootPointOutsideDomain: If a point lies beyond the ghost layer
    """
    grid = u.grid
    if not isinstance(grid, Grid1D):
        raise ValueError("P1 interpolation is implemented for 1D grids only")
    points = np.asarray(points, dtype=float)
    if isinstance(bc, Periodic):
        return np.interp(points, grid.nodes, u.values, period=grid.length)
    
    x_ext = grid.extended_nodes(GHOST_WIDTH)
    lo, hi = x_ext[0] - _FOOT_TOL, x_ext[-1] + _FOOT_TOL
    outside = (points < lo) | (points > hi)
    if np.any(outside):
        worst = points[outside][0]
        raise FootPointOutsideDomain(
            f"Foot point {worst:.6g} outside extended domain [{x_ext[0]:.6g}, {x_ext[-1]:.6g}]"
        )
    ext = fill_ghosts(u.values, bc, GHOST_WIDTH, t=u.t, grid=grid)
    return np.interp(points, x_ext, ext)


def sl_monotone_step(u: Field, control: ControlModel, tau: float, bc: BoundaryCondition) -> Field:
    """
    One semi-Lagrangian step.
    
    Args:
        u: Field at time t (1D)
        control: Dynamics, running cost and control sets
        tau: Time step
        bc: Boundary condition
        
    Returns:
        Field at time t + tau
    """
    grid = u.grid
    if not isinstance(grid, Grid1D):
        raise ValueError("The semi-Lagrangian step is implemented for 1D grids only")
    x = grid.nodes
    
    best = np.full(x.shape, np.inf)
    for a in control.A:
        worst = np.full(x.shape, -np.inf)
        for b in control.B:
            foot = x + tau * np.asarray(control.f(x, a, b), dtype=float)
            value = interpolate_p1(u, foot, bc) + tau * np.asarray(control.ell(x, a, b), dtype=float)
            worst = np.maximum(worst, value)
        best = np.minimum(best, worst)
    
    t_next = u.t + tau
    return u.with_values(bc.enforce(best, grid, t_next), t=t_next)
