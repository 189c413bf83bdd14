"""
Mesh-weighted discrete error norms.
"""

from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from hjfilter.mesh.field import Field
from hjfilter.mesh.grid import Grid1D, Grid2D

ExactSpec = Union[np.ndarray, Callable[..., np.ndarray]]


@dataclass(frozen=True)
class ErrorNorms:
    """l1 = w*sum|e|, l2 = sqrt(w*sum e^2), linf = max|e| with w the cell measure."""
    
    l1: float
    l2: float
    linf: float
    mask_description: str = "all nodes"
    
    def pick(self, norm: str) -> float:
        """Value of the norm named "l1", "l2" or "linf"."""
        if norm not in ("l1", "l2", "linf"):
            raise ValueError(f"Unknown norm '{norm}'. Available: ['l1', 'l2', 'linf']")
        return getattr(self, norm)


def _exact_values(u: Field, exact: ExactSpec) -> np.ndarray:
    if not callable(exact):
        values = np.asarray(exact, dtype=float)
    elif isinstance(u.grid, Grid1D):
        values = np.asarray(exact(u.t, u.grid.nodes), dtype=float)
    else:
        X, Y = u.grid.mesh()
        values = np.asarray(exact(u.t, X, Y), dtype=float)
    if values.shape != u.values.shape:
        raise ValueError(f"Exact values shape {values.shape} does not match field {u.values.shape}")
    return values


def error_norms(
    u: Field,
    exact: ExactSpec,
    mask: Optional[np.ndarray] = None,
    mask_description: Optional[str] = None,
) -> ErrorNorms:
    """
    Error norms of a field against exact values.
    
    Args:
        u: Numerical solution
        exact: Exact nodal values, or a function (t, x[, y]) evaluated at u.t
        mask: Boolean array selecting the nodes to measure (all when None)
        mask_description: Label stored with the result
        
    Returns:
        ErrorNorms
        
    Raises:
        ValueError: If the mask selects no node
    """
    error = u.values - _exact_values(u, exact)
    if mask is not None:
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != error.shape:
            raise ValueError(f"Mask shape {mask.shape} does not match field {error.shape}")
        if not mask.any():
            raise ValueError("Error mask selects no node")
        error = error[mask]
    
    weight = u.grid.dx if isinstance(u.grid, Grid1D) else u.grid.dx * u.grid.dy
    abs_error = np.abs(error)
    return ErrorNorms(
        l1=float(weight * abs_error.sum()),
        l2=float(np.sqrt(weight * np.square(abs_error).sum())),
        linf=float(abs_error.max()),
        mask_description=mask_description or ("all nodes" if mask is None else "masked"),
    )


def error_norms_2d(
    u: Field, exact: ExactSpec, mask: Optional[np.ndarray] = None
) -> ErrorNorms:
    """error_norms restricted to 2D fields (weights dx*dy)."""
    if not isinstance(u.grid, Grid2D):
        raise ValueError("error_norms_2d needs a field on a 2D grid")
    return error_norms(u, exact, mask)
