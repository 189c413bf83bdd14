"""
Discrete solution at one time level.
"""

from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from hjfilter.mesh.grid import Grid, Grid1D


class SchemeDivergence(RuntimeError):
    """Raised when a step produces non-finite or runaway values."""
    
    def __init__(self, message: str, step: Optional[int] = None):
        super().__init__(message)
        self.step = step


@dataclass(frozen=True)
class Field:
    """Values u^n at every stored node of ``grid``."""
    
    values: np.ndarray
    grid: Grid
    t: float = 0.0
    
    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != tuple(self.grid.shape):
            raise ValueError(
                f"Field shape {values.shape} does not match grid shape {self.grid.shape}"
            )
        object.__setattr__(self, "values", values)
    
    @classmethod
    def from_function(cls, grid: Grid, func: Callable, t: float = 0.0) -> "Field":
        """Sample ``func`` at the grid nodes (u^0_j = v0(x_j))."""
        if isinstance(grid, Grid1D):
            values = func(grid.nodes)
        else:
            X, Y = grid.mesh()
            values = func(X, Y)
        return cls(values=np.asarray(values, dtype=float), grid=grid, t=t)
    
    def with_values(self, values: np.ndarray, t: Optional[float] = None) -> "Field":
        """Copy on the same grid with new values (and optionally a new time)."""
        return replace(self, values=values, t=self.t if t is None else t)
    
    @property
    def diverged(self) -> bool:
        """True when any value is non-finite."""
        return not bool(np.all(np.isfinite(self.values)))
    
    def check_finite(self, step: Optional[int] = None, bound: Optional[float] = None) -> "Field":
        """
        Return self, or raise SchemeDivergence on NaN/inf values.
        
        With ``bound`` set, values larger than ``bound`` in magnitude count as a
        blow-up too.
        """
        where = f" at step {step}" if step is not None else ""
        if self.diverged:
            raise SchemeDivergence(f"Non-finite values{where} (t={self.t:.6g})", step=step)
        if bound is not None:
            peak = float(np.max(np.abs(self.values)))
            if peak > bound:
                raise SchemeDivergence(
                    f"Values reached {peak:.3g} > {bound:.3g}{where} (t={self.t:.6g})", step=step
                )
        return self
