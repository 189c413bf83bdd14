"""
Monotone numerical Hamiltonians h^M.

A 1D numerical Hamiltonian is evaluated as h(x, u_minus, u_plus) where
u_minus/u_plus are the backward/forward difference quotients. It must be
consistent (h(x, p, p) = H(x, p)), non-decreasing in u_minus and
non-increasing in u_plus.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from hjfilter.hamiltonians.analytic import AnalyticHamiltonian


@dataclass(frozen=True)
class MonotoneHamiltonian1D:
    """h^M(x, u-, u+) with the constant c0 entering the CFL condition."""
    
    name: str
    func: Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]
    c0: float
    
    def __call__(self, x, u_minus, u_plus) -> np.ndarray:
        return self.func(x, u_minus, u_plus)


@dataclass(frozen=True)
class MonotoneHamiltonian2D:
    """h^M(x, y, ux-, ux+, uy-, uy+) with its CFL constant."""
    
    name: str
    func: Callable[..., np.ndarray]
    c0: float
    
    def __call__(self, x, y, ux_minus, ux_plus, uy_minus, uy_plus) -> np.ndarray:
        return self.func(x, y, ux_minus, ux_plus, uy_minus, uy_plus)


def h_upwind_eikonal(x, u_minus, u_plus) -> np.ndarray:
    """
    Upwind flux for H(p) = |p|: max(u-, -u+).
    
    Example:
        >>> h_upwind_eikonal(0.0, 0.3, 0.7)
        0.3
    """
    return np.maximum(u_minus, -np.asarray(u_plus))


def h_upwind_burgers(x, u_minus, u_plus) -> np.ndarray:
    """Upwind flux for H(p) = p^2/2: (u-)^2/2 on u- > 0 plus (u+)^2/2 on u+ < 0."""
    u_minus = np.asarray(u_minus, dtype=float)
    u_plus = np.asarray(u_plus, dtype=float)
    return 0.5 * np.square(np.maximum(u_minus, 0.0)) + 0.5 * np.square(np.minimum(u_plus, 0.0))


def h_lax_friedrichs(H: AnalyticHamiltonian, c0: float) -> MonotoneHamiltonian1D:
    """
    Lax-Friedrichs flux H(x, (u- + u+)/2) - (c0/2)(u+ - u-).
    
    Args:
        H: Analytic 1D Hamiltonian
        c0: Dissipation constant, at least max |dH/dp| on the working range
        
    Returns:
        MonotoneHamiltonian1D
    """
    if not c0 > 0:
        raise ValueError(f"c0 must be positive, got {c0}")
    
    def flux(x, u_minus, u_plus):
        return H(x, 0.5 * (u_minus + u_plus)) - 0.5 * c0 * (u_plus - u_minus)
    
    return MonotoneHamiltonian1D(f"lf[{H.name}]", flux, c0)


def h_lf_2d(H: AnalyticHamiltonian, cx: float, cy: float) -> MonotoneHamiltonian2D:
    """Two-dimensional Lax-Friedrichs flux with axis-wise dissipation cx, cy."""
    if not (cx > 0 and cy > 0):
        raise ValueError(f"cx and cy must be positive, got ({cx}, {cy})")
    
    def flux(x, y, uxm, uxp, uym, uyp):
        return (
            H(x, y, 0.5 * (uxm + uxp), 0.5 * (uym + uyp))
            - 0.5 * cx * (uxp - uxm)
            - 0.5 * cy * (uyp - uym)
        )
    
    return MonotoneHamiltonian2D(f"lf2d[{H.name}]", flux, max(cx, cy))


def h_upwind_advection_1d(f: Callable[[np.ndarray], np.ndarray], c0: float) -> MonotoneHamiltonian1D:
    """Upwind flux for H(x, p) = f(x) p: max(0, f) u- + min(0, f) u+."""
    
    def flux(x, u_minus, u_plus):
        speed = np.asarray(f(x), dtype=float)
        return np.maximum(speed, 0.0) * u_minus + np.minimum(speed, 0.0) * u_plus
    
    return MonotoneHamiltonian1D("upwind-advection", flux, c0)


def h_upwind_advection_2d(
    f1: Callable[..., np.ndarray], f2: Callable[..., np.ndarray], c0: float
) -> MonotoneHamiltonian2D:
    """
    Upwind flux for H(x, y, p, q) = f1 p + f2 q.
    
    Each velocity component selects the backward difference when positive
    and the forward difference when negative; zero velocity contributes nothing.
    """
    
    def flux(x, y, uxm, uxp, uym, uyp):
        v1 = np.asarray(f1(x, y), dtype=float)
        v2 = np.asarray(f2(x, y), dtype=float)
        return (
            np.maximum(v1, 0.0) * uxm
            + np.minimum(v1, 0.0) * uxp
            + np.maximum(v2, 0.0) * uym
            + np.minimum(v2, 0.0) * uyp
        )
    
    return MonotoneHamiltonian2D("upwind-advection2d", flux, c0)


def h_upwind_eikonal_source(f: Callable[[np.ndarray], np.ndarray]) -> MonotoneHamiltonian1D:
    """max(u-, -u+) - f(x), consistent with H(x, p) = |p| - f(x)."""
    
    def flux(x, u_minus, u_plus):
        return h_upwind_eikonal(x, u_minus, u_plus) - f(x)
    
    return MonotoneHamiltonian1D("upwind-eikonal-source", flux, 1.0)


UPWIND_EIKONAL = MonotoneHamiltonian1D("upwind-eikonal", h_upwind_eikonal, 1.0)


def upwind_burgers(c0: float = 2.0) -> MonotoneHamiltonian1D:
    """Upwind Burgers flux wrapped with its CFL constant."""
    return MonotoneHamiltonian1D("upwind-burgers", h_upwind_burgers, c0)
