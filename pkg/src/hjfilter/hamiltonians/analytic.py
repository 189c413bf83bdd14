"""
Analytic Hamiltonians H(x, p) of the equation v_t + H(x, grad v) = 0.

All callables are vectorised: arguments are numpy arrays (or scalars) that
broadcast against each other.
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np


@dataclass(frozen=True)
class AnalyticHamiltonian:
    """
    Exact Hamiltonian with an optional gradient bound.
    
    Attributes:
        name: Short identifier used in logs and metadata
        func: H(x, p) in 1D, H(x, y, p, q) in 2D
        dim: Space dimension (1 or 2)
        c0: Bound on max |dH/dp| over the working range, if known
    """
    
    name: str
    func: Callable[..., np.ndarray]
    dim: int = 1
    c0: Optional[float] = None
    
    def __post_init__(self):
        if self.dim not in (1, 2):
            raise ValueError(f"dim must be 1 or 2, got {self.dim}")
        if self.c0 is not None and not self.c0 > 0:
            raise ValueError(f"c0 must be positive when supplied, got {self.c0}")
    
    def __call__(self, *args) -> np.ndarray:
        return self.func(*args)


def eikonal_1d() -> AnalyticHamiltonian:
    """H(p) = |p|."""
    return AnalyticHamiltonian("eikonal", lambda x, p: np.abs(p), dim=1, c0=1.0)


def burgers_1d(c0: float = 2.0) -> AnalyticHamiltonian:
    """H(p) = p^2/2; ``c0`` bounds |p| on the data."""
    return AnalyticHamiltonian("burgers", lambda x, p: 0.5 * np.square(p), dim=1, c0=c0)


def advection_1d(speed: float = 1.0) -> AnalyticHamiltonian:
    """H(p) = speed * p."""
    return AnalyticHamiltonian(
        f"advection({speed:g})", lambda x, p: speed * p, dim=1, c0=abs(speed) or None
    )


def eikonal_with_source(f: Callable[[np.ndarray], np.ndarray]) -> AnalyticHamiltonian:
    """H(x, p) = |p| - f(x), the time-marching form of |v_x| = f."""
    return AnalyticHamiltonian("eikonal-source", lambda x, p: np.abs(p) - f(x), dim=1, c0=1.0)


def rotation_2d(c0: float = 2.5) -> AnalyticHamiltonian:
    """H(x, y, p, q) = -y p + x q (rigid rotation)."""
    return AnalyticHamiltonian("rotation", lambda x, y, p, q: -y * p + x * q, dim=2, c0=c0)


def eikonal_2d() -> AnalyticHamiltonian:
    """H(p, q) = |(p, q)| (euclidean norm)."""
    return AnalyticHamiltonian("eikonal2d", lambda x, y, p, q: np.hypot(p, q), dim=2, c0=1.0)
