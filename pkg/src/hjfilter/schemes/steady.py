"""
Fixed-point iteration of a one-step operator towards a steady state.
"""

from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from hjfilter.mesh.field import Field

DEFAULT_TOL = 1e-6
DEFAULT_MAX_ITERATIONS = 5000


@dataclass
class SteadyResult:
    """Outcome of steady_solve."""
    
    field: Field
    iterations: int
    residual: float
    converged: bool
    history: List[float] = field(default_factory=list)


def steady_solve(
    scheme: Callable[[Field], Field],
    u0: Field,
    tol: float = DEFAULT_TOL,
    n_max: int = DEFAULT_MAX_ITERATIONS,
    scale: float = 1.0,
    bound: Optional[float] = None,
) -> SteadyResult:
    """
    Iterate u^{n+1} = scheme(u^n) until max_j |u^{n+1}_j - u^n_j| / scale <= tol or n = n_max.
    
    Non-convergence is not an error: the last iterate is returned with
    ``converged=False``, which is the expected outcome for schemes that only
    settle close to a fixed point. Time marching passes ``scale=tau``, which
    turns the test into a bound on the discrete time derivative.
    
    Args:
        scheme: One-step operator
        u0: Initial guess
        tol: Stopping threshold on the scaled sup-norm residual
        n_max: Iteration cap
        scale: Divisor of the residual
        bound: Magnitude above which an iterate counts as diverged
        
    Returns:
        SteadyResult
        
    Raises:
        SchemeDivergence: If an iterate is non-finite or exceeds ``bound``
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if not scale > 0:
        raise ValueError(f"scale must be positive, got {scale}")
    
    u = u0
    history: List[float] = []
    residual = float("inf")
    for n in range(1, n_max + 1):
        nxt = scheme(u).check_finite(step=n, bound=bound)
        residual = float(np.max(np.abs(nxt.values - u.values))) / scale
        history.append(residual)
        u = nxt
        if residual <= tol:
            return SteadyResult(u, n, residual, True, history)
    return SteadyResult(u, n_max, residual, False, history)
