"""
Limiters applied to the high-order step before filtering.

- extrema1d: near nodes where the characteristic velocity changes sign, keep
  u^{n+1}_j inside [min, max] of u^n over the 3-point stencil by clamping the
  high-order flux h^A = (u - S^A(u)) / tau.
- clamp2d: clamp S^A(u) into the 5-point stencil range of u^n.
"""

from typing import Tuple

import numpy as np

from hjfilter.mesh.boundary import BoundaryCondition, fill_ghosts
from hjfilter.mesh.field import Field
from hjfilter.mesh.grid import Grid1D, Grid2D

LIMITERS = ("off", "extrema1d", "clamp2d")


def _stencil_range(u: Field, bc: BoundaryCondition) -> Tuple[np.ndarray, np.ndarray]:
    ext = fill_ghosts(u.values, bc, width=1, t=u.t, grid=u.grid)
    if isinstance(u.grid, Grid1D):
        stack = np.stack([ext[:-2], ext[1:-1], ext[2:]])
    else:
        stack = np.stack(
            [ext[1:-1, 1:-1], ext[:-2, 1:-1], ext[2:, 1:-1], ext[1:-1, :-2], ext[1:-1, 2:]]
        )
    return stack.min(axis=0), stack.max(axis=0)


def limiter_1d(
    u: Field,
    proposed_hA: np.ndarray,
    velocity_range: Tuple[np.ndarray, np.ndarray],
    tau: float,
    bc: BoundaryCondition,
) -> np.ndarray:
    """
    Clamp h^A at nodes where min_a f(x_j, a) <= 0 <= max_a f(x_j, a).
    
    Args:
        u: Field u^n
        proposed_hA: High-order flux values at the nodes
        velocity_range: Per-node (min, max) of the characteristic velocities
        tau: Time step
        bc: Boundary condition for the stencil ghosts
        
    Returns:
        Limited h^A; untriggered nodes are returned unchanged
    """
    if not isinstance(u.grid, Grid1D):
        raise ValueError("limiter_1d needs a 1D grid")
    vmin, vmax = (np.broadcast_to(np.asarray(v, dtype=float), u.values.shape) for v in velocity_range)
    triggered = (vmin <= 0.0) & (vmax >= 0.0)
    
    u_min, u_max = _stencil_range(u, bc)
    h_max = (u.values - u_min) / tau
    h_min = (u.values - u_max) / tau
    with np.errstate(invalid="ignore"):
        clamped = np.minimum(np.maximum(proposed_hA, h_min), h_max)
    return np.where(triggered, clamped, proposed_hA)


def limit_high_order_step(
    u: Field,
    sa: Field,
    velocity_range: Tuple[np.ndarray, np.ndarray],
    tau: float,
    bc: BoundaryCondition,
) -> Field:
    """S^A rewritten as u - tau * h^A, with h^A passed through limiter_1d."""
    with np.errstate(over="ignore", invalid="ignore"):
        h_a = (u.values - sa.values) / tau
        limited = limiter_1d(u, h_a, velocity_range, tau, bc)
        return sa.with_values(u.values - tau * limited)


def limiter_clamp_2d(u_prev: Field, u_new: Field, bc: BoundaryCondition) -> Field:
    """Clamp ``u_new`` nodewise into the 5-point stencil [min, max] of ``u_prev``."""
    if not isinstance(u_prev.grid, Grid2D):
        raise ValueError("limiter_clamp_2d needs a 2D grid")
    if u_prev.grid != u_new.grid:
        raise ValueError("limiter_clamp_2d needs fields on the same grid")
    u_min, u_max = _stencil_range(u_prev, bc)
    return u_new.with_values(np.minimum(np.maximum(u_new.values, u_min), u_max))


def validate_limiter(limiter: str, dim: int) -> str:
    """Check the limiter name and its dimension."""
    if limiter not in LIMITERS:
        raise ValueError(f"Unknown limiter '{limiter}'. Available: {list(LIMITERS)}")
    if limiter == "extrema1d" and dim != 1:
        raise ValueError("Limiter 'extrema1d' needs a 1D problem")
    if limiter == "clamp2d" and dim != 2:
        raise ValueError("Limiter 'clamp2d' needs a 2D problem")
    return limiter
