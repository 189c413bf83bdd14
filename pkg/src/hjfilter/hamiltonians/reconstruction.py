"""
Derivative reconstructions on ghost-extended arrays.

Every function takes an array extended by ``width`` ghost nodes on each side of
each axis and returns values at the physical nodes only, differentiating along
``axis``.
"""

from typing import NamedTuple

import numpy as np

from hjfilter.mesh.grid import GHOST_WIDTH

PROJECTION_MODES = ("clamp", "reset")


class DerivativePair(NamedTuple):
    """Left- and right-biased derivative estimates at each node."""
    
    minus: np.ndarray
    plus: np.ndarray


def _shifted(ext: np.ndarray, k: int, width: int, axis: int) -> np.ndarray:
    # physical block of ext moved by k nodes along axis
    n = ext.shape[axis] - 2 * width
    if n < 1:
        raise ValueError(f"Array of shape {ext.shape} has no physical nodes for width {width}")
    if abs(k) > width:
        raise ValueError(f"Shift {k} exceeds ghost width {width}")
    index = [slice(width, ext.shape[a] - width) for a in range(ext.ndim)]
    index[axis] = slice(width + k, width + k + n)
    return ext[tuple(index)]


def minmod(a, b) -> np.ndarray:
    """
    The argument of smaller magnitude when a and b share a sign, else 0.
    
    Example:
        >>> minmod(1.0, 3.0)
        1.0
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    smaller = np.where(np.abs(a) <= np.abs(b), a, b)
    return np.where(a * b > 0, smaller, 0.0)


def one_sided_derivatives(
    ext: np.ndarray, dx: float, width: int = GHOST_WIDTH, axis: int = 0
) -> DerivativePair:
    """First-order differences D-u = (u_j - u_{j-1})/dx and D+u = (u_{j+1} - u_j)/dx."""
    center = _shifted(ext, 0, width, axis)
    return DerivativePair(
        minus=(center - _shifted(ext, -1, width, axis)) / dx,
        plus=(_shifted(ext, 1, width, axis) - center) / dx,
    )


def centered_derivative(
    ext: np.ndarray, dx: float, width: int = GHOST_WIDTH, axis: int = 0
) -> np.ndarray:
    """(u_{j+1} - u_{j-1}) / (2 dx)."""
    return (_shifted(ext, 1, width, axis) - _shifted(ext, -1, width, axis)) / (2.0 * dx)


def second_difference(
    ext: np.ndarray, dx: float, k: int = 0, width: int = GHOST_WIDTH, axis: int = 0
) -> np.ndarray:
    """D2u at nodes shifted by k: (u_{j+k+1} - 2u_{j+k} + u_{j+k-1}) / dx^2."""
    return (
        _shifted(ext, k + 1, width, axis)
        - 2.0 * _shifted(ext, k, width, axis)
        + _shifted(ext, k - 1, width, axis)
    ) / (dx * dx)


def eno2_derivatives(
    ext: np.ndarray, dx: float, width: int = GHOST_WIDTH, axis: int = 0
) -> DerivativePair:
    """
    Second-order ENO derivatives.
    
    D-bar(+/-) u_j = D(+/-) u_j -/+ (dx/2) minmod(D2u_j, D2u_{j+/-1}).
    Exact on quadratics; falls back to the flatter stencil across kinks.
    
    Args:
        ext: Values with at least two ghost nodes per side
        dx: Spacing along ``axis``
        width: Ghost width of ``ext`` (>= 2)
        axis: Differentiation axis
        
    Returns:
        DerivativePair at the physical nodes
    """
    if width < 2:
        raise ValueError(f"ENO2 needs a ghost width of at least 2, got {width}")
    first = one_sided_derivatives(ext, dx, width, axis)
    d2_center = second_difference(ext, dx, 0, width, axis)
    d2_left = second_difference(ext, dx, -1, width, axis)
    d2_right = second_difference(ext, dx, 1, width, axis)
    return DerivativePair(
        minus=first.minus + 0.5 * dx * minmod(d2_center, d2_left),
        plus=first.plus - 0.5 * dx * minmod(d2_center, d2_right),
    )


def project_derivative(a, b, y, mode: str = "clamp") -> np.ndarray:
    """
    Keep a high-order derivative y within distance b of the first-order one a.
    
    Args:
        a: First-order difference
        b: Band half-width (M * dx), non-negative
        y: High-order estimate
        mode: "clamp" projects onto [a - b, a + b]; "reset" returns a outside the band
        
    Returns:
        Projected derivative
    """
    if mode not in PROJECTION_MODES:
        raise ValueError(f"Unknown projection mode '{mode}'. Available: {list(PROJECTION_MODES)}")
    a = np.asarray(a, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(np.asarray(b) < 0):
        raise ValueError(f"Projection band must be non-negative, got {b}")
    if mode == "clamp":
        return np.minimum(np.maximum(y, a - b), a + b)
    return np.where(np.abs(y - a) <= b, y, a)
