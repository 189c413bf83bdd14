"""
Boundary conditions and ghost-value filling.

Ghost layers are added on every side of every axis. Dirichlet ghosts carry the
prescribed value; periodic ghosts wrap indices (the grid must then be stored
without its right endpoint).
"""

from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from hjfilter.mesh.grid import GHOST_WIDTH, Grid, Grid1D, Grid2D

BoundaryValue = Union[float, Callable[..., np.ndarray]]


@dataclass(frozen=True)
class Dirichlet:
    """
    Prescribed boundary values.
    
    ``value`` is a constant or a function ``value(t, x)`` (1D) /
    ``value(t, x, y)`` (2D) evaluated at ghost and boundary nodes.
    """
    
    value: BoundaryValue = 0.0
    
    kind = "dirichlet"
    
    @property
    def is_constant(self) -> bool:
        return not callable(self.value)
    
    def evaluate(self, t: float, *coords: np.ndarray) -> np.ndarray:
        if self.is_constant:
            return np.full(np.shape(coords[0]), float(self.value))
        return np.asarray(self.value(t, *coords), dtype=float)
    
    def enforce(self, values: np.ndarray, grid: Grid, t: float = 0.0) -> np.ndarray:
        """Reset the physical boundary nodes to the prescribed value (returns a copy)."""
        out = np.array(values, dtype=float, copy=True)
        if isinstance(grid, Grid1D):
            x = grid.nodes[[0, -1]]
            out[[0, -1]] = self.evaluate(t, x)
            return out
        X, Y = grid.mesh()
        ring = np.zeros(grid.shape, dtype=bool)
        ring[[0, -1], :] = True
        ring[:, [0, -1]] = True
        out[ring] = self.evaluate(t, X[ring], Y[ring])
        return out


@dataclass(frozen=True)
class Periodic:
    """Periodic wrap; requires grids stored with ``endpoint=False``."""
    
    kind = "periodic"
    
    def enforce(self, values: np.ndarray, grid: Grid, t: float = 0.0) -> np.ndarray:
        return values


BoundaryCondition = Union[Dirichlet, Periodic]


def _check_periodic_grid(grid: Optional[Grid]) -> None:
    if grid is None:
        return
    axes = [grid] if isinstance(grid, Grid1D) else [grid.x, grid.y]
    for axis in axes:
        if axis.endpoint:
            raise ValueError(
                "Periodic boundary needs a grid stored without its right endpoint "
                "(endpoint=False)"
            )


def fill_ghosts(
    values: np.ndarray,
    bc: BoundaryCondition,
    width: int = GHOST_WIDTH,
    t: float = 0.0,
    grid: Optional[Grid] = None,
) -> np.ndarray:
    """
    Extend nodal values with ``width`` ghost nodes on each side of each axis.
    
    Args:
        values: Nodal values (1D or 2D array)
        bc: Boundary condition
        width: Ghost width (>= 1; 2 for ENO2 stencils)
        t: Time, for time-dependent Dirichlet data
        grid: Grid, required only for function-valued Dirichlet data
        
    Returns:
        Extended array of shape ``values.shape + 2*width`` per axis
        
    Example:
        >>> fill_ghosts(np.array([1., 2., 3.]), Periodic(), width=1)
        array([3., 1., 2., 3., 1.])
    """
    if width < 1:
        raise ValueError(f"Ghost width must be >= 1, got {width}")
    values = np.asarray(values, dtype=float)
    
    if isinstance(bc, Periodic):
        _check_periodic_grid(grid)
        if any(n < width for n in values.shape):
            raise ValueError(f"Periodic wrap of width {width} needs at least {width} nodes")
        return np.pad(values, width, mode="wrap")
    
    if bc.is_constant:
        return np.pad(values, width, mode="constant", constant_values=float(bc.value))
    
    if grid is None:
        raise ValueError("Function-valued Dirichlet data needs the grid to place ghosts")
    
    out = np.pad(values, width, mode="constant", constant_values=0.0)
    ghost = np.ones(out.shape, dtype=bool)
    ghost[(slice(width, -width),) * values.ndim] = False
    if isinstance(grid, Grid1D):
        x_ext = grid.extended_nodes(width)
        out[ghost] = bc.evaluate(t, x_ext[ghost])
    else:
        X, Y = np.meshgrid(
            grid.x.extended_nodes(width), grid.y.extended_nodes(width), indexing="ij"
        )
        out[ghost] = bc.evaluate(t, X[ghost], Y[ghost])
    return out


__all__ = [
    "Dirichlet",
    "Periodic",
    "BoundaryCondition",
    "fill_ghosts",
]
