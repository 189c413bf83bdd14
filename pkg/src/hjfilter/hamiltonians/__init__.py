"""
Analytic Hamiltonians, monotone numerical Hamiltonians and derivative reconstructions.
"""

from hjfilter.hamiltonians.analytic import (
    AnalyticHamiltonian,
    advection_1d,
    burgers_1d,
    eikonal_1d,
    eikonal_2d,
    eikonal_with_source,
    rotation_2d,
)
from hjfilter.hamiltonians.monotone import (
    UPWIND_EIKONAL,
    MonotoneHamiltonian1D,
    MonotoneHamiltonian2D,
    h_lax_friedrichs,
    h_lf_2d,
    h_upwind_advection_1d,
    h_upwind_advection_2d,
    h_upwind_burgers,
    h_upwind_eikonal,
    h_upwind_eikonal_source,
    upwind_burgers,
)
from hjfilter.hamiltonians.reconstruction import (
    DerivativePair,
    centered_derivative,
    eno2_derivatives,
    minmod,
    one_sided_derivatives,
    project_derivative,
    second_difference,
)

__all__ = [
    "AnalyticHamiltonian",
    "advection_1d",
    "burgers_1d",
    "eikonal_1d",
    "eikonal_2d",
    "eikonal_with_source",
    "rotation_2d",
    "UPWIND_EIKONAL",
    "MonotoneHamiltonian1D",
    "MonotoneHamiltonian2D",
    "h_lax_friedrichs",
    "h_lf_2d",
    "h_upwind_advection_1d",
    "h_upwind_advection_2d",
    "h_upwind_burgers",
    "h_upwind_eikonal",
    "h_upwind_eikonal_source",
    "upwind_burgers",
    "DerivativePair",
    "centered_derivative",
    "eno2_derivatives",
    "minmod",
    "one_sided_derivatives",
    "project_derivative",
    "second_difference",
]
