"""
Uniform space grids, the time grid, and CFL-driven time-step selection.

Node convention: x_j = xmin + j*dx with dx = (xmax - xmin)/M.
- Dirichlet problems store M+1 nodes (both endpoints, ``endpoint=True``).
- Periodic problems store M nodes with x_M identified with x_0 (``endpoint=False``).
"""

import math
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

# ENO2 needs D2 at j-1 and j+1, i.e. two neighbours on each side
MIN_NODES = 4
GHOST_WIDTH = 2


@dataclass(frozen=True)
class Grid1D:
    """Uniform 1D mesh on [xmin, xmax]."""
    
    xmin: float
    xmax: float
    M: int
    endpoint: bool = True
    
    def __post_init__(self):
        if not self.xmax > self.xmin:
            raise ValueError(f"Degenerate interval: xmin={self.xmin}, xmax={self.xmax}")
        if int(self.M) != self.M or self.M < MIN_NODES:
            raise ValueError(f"M must be an integer >= {MIN_NODES}, got {self.M}")
    
    @property
    def dx(self) -> float:
        """Mesh spacing."""
        return (self.xmax - self.xmin) / self.M
    
    @property
    def n_nodes(self) -> int:
        """Number of stored nodes."""
        return self.M + 1 if self.endpoint else self.M
    
    @property
    def shape(self) -> Tuple[int]:
        return (self.n_nodes,)
    
    @property
    def length(self) -> float:
        return self.xmax - self.xmin
    
    @property
    def nodes(self) -> np.ndarray:
        """Node coordinates x_j = xmin + j*dx."""
        return self.xmin + np.arange(self.n_nodes) * self.dx
    
    def node(self, j: int) -> float:
        """Coordinate of node j."""
        return self.xmin + j * self.dx
    
    def extended_nodes(self, width: int = GHOST_WIDTH) -> np.ndarray:
        """Node coordinates including ``width`` ghost nodes on each side."""
        return self.xmin + np.arange(-width, self.n_nodes + width) * self.dx


@dataclass(frozen=True)
class Grid2D:
    """Tensor-product uniform mesh; arrays are indexed [i, j] with i along x."""
    
    x: Grid1D
    y: Grid1D
    
    @property
    def dx(self) -> float:
        return self.x.dx
    
    @property
    def dy(self) -> float:
        return self.y.dx
    
    @property
    def shape(self) -> Tuple[int, int]:
        return (self.x.n_nodes, self.y.n_nodes)
    
    @property
    def M(self) -> int:
        """Number of cells along x (the refinement index of the tables)."""
        return self.x.M
    
    def mesh(self) -> Tuple[np.ndarray, np.ndarray]:
        """Coordinate arrays X, Y of shape ``self.shape``."""
        return np.meshgrid(self.x.nodes, self.y.nodes, indexing="ij")


Grid = Union[Grid1D, Grid2D]


@dataclass(frozen=True)
class TimeGrid:
    """Uniform time levels t_n = n*tau with tau = T/N."""
    
    T: float
    N: int
    
    def __post_init__(self):
        if not self.T > 0:
            raise ValueError(f"Final time T must be positive, got {self.T}")
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"N must be a positive integer, got {self.N}")
    
    @property
    def tau(self) -> float:
        return self.T / self.N
    
    def time(self, n: int) -> float:
        """Time of level n."""
        return n * self.tau
    
    @classmethod
    def from_step(cls, T: float, tau_max: float) -> "TimeGrid":
        """
        Smallest N with T/N <= tau_max.
        
        Args:
            T: Final time
            tau_max: Largest admissible step (e.g. from the CFL condition)
            
        Returns:
            TimeGrid with N = ceil(T/tau_max) and tau = T/N
        """
        if not tau_max > 0:
            raise ValueError(f"tau_max must be positive, got {tau_max}")
        # tolerance keeps exact ratios (0.5/0.025) from rounding up
        N = max(1, math.ceil(T / tau_max - 1e-9))
        return cls(T=T, N=N)


def build_grid_1d(xmin: float, xmax: float, M: int, endpoint: bool = True) -> Grid1D:
    """
    Build a uniform 1D grid.
    
    Args:
        xmin: Left end of the domain
        xmax: Right end of the domain
        M: Number of cells (dx = (xmax - xmin)/M), at least 4
        endpoint: Store x_M (Dirichlet) or identify it with x_0 (periodic)
        
    Returns:
        Grid1D
        
    Example:
        >>> build_grid_1d(-2, 2, 40).dx
        0.1
    """
    return Grid1D(xmin=float(xmin), xmax=float(xmax), M=int(M), endpoint=endpoint)


def build_grid_2d(
    xmin: float,
    xmax: float,
    ymin: float,
    ymax: float,
    Mx: int,
    My: int,
    endpoint: bool = True,
) -> Grid2D:
    """Build a tensor-product 2D grid with independent spacings."""
    return Grid2D(
        x=build_grid_1d(xmin, xmax, Mx, endpoint),
        y=build_grid_1d(ymin, ymax, My, endpoint),
    )


def _check_cfl_inputs(cfl: float, c0: float, name: str) -> None:
    if not 0 < cfl <= 1:
        raise ValueError(f"{name} must be in (0, 1], got {cfl}")
    if not c0 > 0:
        raise ValueError(f"c0 must be positive, got {c0}")


def tau_from_cfl(grid: Grid1D, cfl: float, c0: float) -> float:
    """
    Time step meeting c0*tau/dx = cfl.
    
    Args:
        grid: 1D grid
        cfl: CFL number in (0, 1]
        c0: Bound on the characteristic speed
        
    Returns:
        tau = cfl*dx/c0
    """
    _check_cfl_inputs(cfl, c0, "cfl")
    return cfl * grid.dx / c0


def tau_from_cfl_2d(grid: Grid2D, mu: float, c0: float) -> float:
    """
    Time step meeting mu = c0*(tau/dx + tau/dy).
    
    Args:
        grid: 2D grid
        mu: CFL number in (0, 1]
        c0: Bound on the characteristic speed
        
    Returns:
        tau = mu / (c0*(1/dx + 1/dy))
    """
    _check_cfl_inputs(mu, c0, "mu")
    return mu / (c0 * (1.0 / grid.dx + 1.0 / grid.dy))
