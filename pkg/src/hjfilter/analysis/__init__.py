"""
Error norms, refinement studies and consistency probes.
"""

from hjfilter.analysis.convergence import (
    ConvergenceRow,
    convergence_order,
    refinement_study,
    rows_to_frame,
    validate_levels,
)
from hjfilter.analysis.norms import ErrorNorms, error_norms, error_norms_2d
from hjfilter.analysis.probes import (
    ConsistencyProbeResult,
    SmoothSolution,
    consistency_probe,
    fit_order,
    transport_solution,
)

__all__ = [
    "ConvergenceRow",
    "convergence_order",
    "refinement_study",
    "rows_to_frame",
    "validate_levels",
    "ErrorNorms",
    "error_norms",
    "error_norms_2d",
    "ConsistencyProbeResult",
    "SmoothSolution",
    "consistency_probe",
    "fit_order",
    "transport_solution",
]
