"""
Problem descriptors and the problem registry.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np

from hjfilter.hamiltonians.analytic import AnalyticHamiltonian
from hjfilter.hamiltonians.monotone import MonotoneHamiltonian1D, MonotoneHamiltonian2D
from hjfilter.mesh.boundary import BoundaryCondition, Periodic
from hjfilter.mesh.grid import Grid, Grid1D, build_grid_1d, build_grid_2d, tau_from_cfl, tau_from_cfl_2d
from hjfilter.schemes.epsilon import EpsilonRule
from hjfilter.schemes.limiters import validate_limiter
from hjfilter.schemes.semi_lagrangian import ControlModel

NORMS = ("l1", "l2", "linf")


@dataclass(frozen=True)
class OracleConfig:
    """Sampling resolution of brute-force exact-solution oracles."""
    
    points_per_unit: int = 10_000
    points_per_unit_2d: int = 1_000
    
    def __post_init__(self):
        if self.points_per_unit < 1 or self.points_per_unit_2d < 1:
            raise ValueError("Oracle resolutions must be positive")


@dataclass(frozen=True)
class Problem:
    """
    A benchmark problem with its default discretisation settings.
    
    ``exact`` takes (t, x) in 1D and (t, x, y) in 2D and is vectorised over
    the space arguments. For steady problems ``T`` is ignored and ``exact``
    does not depend on t.
    """
    
    key: str
    title: str
    dim: int
    H: AnalyticHamiltonian
    hM: Union[MonotoneHamiltonian1D, MonotoneHamiltonian2D]
    domain: Tuple[float, ...]
    v0: Callable[..., np.ndarray]
    bc: BoundaryCondition
    exact: Callable[..., np.ndarray]
    T: float
    cfl: float = 0.37
    c0: float = 1.0
    epsilon: EpsilonRule = field(default_factory=EpsilonRule)
    limiter: str = "off"
    obstacle: Optional[Callable[..., np.ndarray]] = None
    norm: str = "l2"
    levels: Tuple[int, ...] = (40, 80, 160, 320, 640)
    schemes: Tuple[str, ...] = ("filtered-centered", "centered", "eno2")
    steady: bool = False
    velocity_range: Optional[Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray]]] = None
    control: Optional[ControlModel] = None
    mask: Optional[Callable[[Grid], np.ndarray]] = None
    
    def __post_init__(self):
        if self.dim not in (1, 2):
            raise ValueError(f"dim must be 1 or 2, got {self.dim}")
        if len(self.domain) != 2 * self.dim:
            raise ValueError(f"domain needs {2 * self.dim} bounds, got {self.domain}")
        if self.norm not in NORMS:
            raise ValueError(f"Unknown norm '{self.norm}'. Available: {list(NORMS)}")
        if self.T < 0:
            raise ValueError(f"T must be non-negative, got {self.T}")
        validate_limiter(self.limiter, self.dim)
    
    @property
    def periodic(self) -> bool:
        return isinstance(self.bc, Periodic)
    
    def build_grid(self, M: int) -> Grid:
        """Grid with M cells per axis."""
        endpoint = not self.periodic
        if self.dim == 1:
            return build_grid_1d(self.domain[0], self.domain[1], M, endpoint)
        return build_grid_2d(*self.domain, M, M, endpoint)
    
    def tau_max(self, grid: Grid, cfl: Optional[float] = None) -> float:
        """Largest time step allowed by the problem's CFL number (or ``cfl``)."""
        cfl = self.cfl if cfl is None else cfl
        if isinstance(grid, Grid1D):
            return tau_from_cfl(grid, cfl, self.c0)
        return tau_from_cfl_2d(grid, cfl, self.c0)
    
    def exact_values(self, grid: Grid, t: float) -> np.ndarray:
        """Exact solution sampled at the nodes."""
        if isinstance(grid, Grid1D):
            return np.asarray(self.exact(t, grid.nodes), dtype=float)
        X, Y = grid.mesh()
        return np.asarray(self.exact(t, X, Y), dtype=float)
    
    def error_mask(self, grid: Grid) -> Optional[np.ndarray]:
        """Nodes included in the error norms, or None for all nodes."""
        return None if self.mask is None else self.mask(grid)
    
    def velocities(self, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Per-node (min, max) of the characteristic velocities."""
        if self.velocity_range is None:
            raise ValueError(f"Problem '{self.key}' has no velocity information for the 1D limiter")
        return self.velocity_range(x)


PROBLEMS: Dict[str, Callable[[], Problem]] = {}


def register_problem(key: str):
    """Decorator adding a problem factory to PROBLEMS."""
    
    def decorator(factory: Callable[[], Problem]) -> Callable[[], Problem]:
        PROBLEMS[key] = factory
        return factory
    
    return decorator


def get_problem(key: str) -> Problem:
    """
    Build a registered problem.
    
    Args:
        key: Problem identifier (e.g. "ex1a")
        
    Returns:
        Problem
        
    Raises:
        ValueError: If the key is unknown
    """
    if key not in PROBLEMS:
        raise ValueError(f"Unknown problem '{key}'. Available: {list(PROBLEMS.keys())}")
    return PROBLEMS[key]()
