"""
Obstacle wrapping for min(v_t + H, v - g) = 0.
"""

from typing import Callable

import numpy as np

from hjfilter.mesh.field import Field
from hjfilter.mesh.grid import Grid1D


def obstacle_values(grid, g: Callable[..., np.ndarray]) -> np.ndarray:
    """Sample the obstacle g at the grid nodes."""
    if isinstance(grid, Grid1D):
        return np.asarray(g(grid.nodes), dtype=float)
    X, Y = grid.mesh()
    return np.asarray(g(X, Y), dtype=float)


def obstacle_step(step: Callable[[Field], Field], u: Field, g: np.ndarray) -> Field:
    """max(step(u)_j, g_j) nodewise."""
    stepped = step(u)
    g = np.asarray(g, dtype=float)
    if g.shape != stepped.values.shape:
        raise ValueError(f"Obstacle shape {g.shape} does not match field shape {stepped.values.shape}")
    return stepped.with_values(np.maximum(stepped.values, g))
