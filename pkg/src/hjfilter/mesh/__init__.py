"""
Uniform grids, time grids, boundary conditions and discrete fields.
"""

from hjfilter.mesh.boundary import (
    BoundaryCondition,
    Dirichlet,
    Periodic,
    fill_ghosts,
)
from hjfilter.mesh.field import Field, SchemeDivergence
from hjfilter.mesh.grid import (
    GHOST_WIDTH,
    Grid,
    Grid1D,
    Grid2D,
    TimeGrid,
    build_grid_1d,
    build_grid_2d,
    tau_from_cfl,
    tau_from_cfl_2d,
)

__all__ = [
    "BoundaryCondition",
    "Dirichlet",
    "Periodic",
    "fill_ghosts",
    "Field",
    "SchemeDivergence",
    "GHOST_WIDTH",
    "Grid",
    "Grid1D",
    "Grid2D",
    "TimeGrid",
    "build_grid_1d",
    "build_grid_2d",
    "tau_from_cfl",
    "tau_from_cfl_2d",
]
