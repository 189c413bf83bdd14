"""
Time-stepping operators and scheme assembly.
"""

from hjfilter.schemes.epsilon import EpsilonRule, compute_epsilon, estimate_switching_constant
from hjfilter.schemes.filters import (
    FILTERS,
    FilterFunction,
    FroeseOberman,
    NewFilter,
    filter_argument,
    filter_eval,
    get_filter,
)
from hjfilter.schemes.limiters import (
    LIMITERS,
    limit_high_order_step,
    limiter_1d,
    limiter_clamp_2d,
)
from hjfilter.schemes.obstacle import obstacle_step, obstacle_values
from hjfilter.schemes.semi_lagrangian import (
    ControlModel,
    FootPointOutsideDomain,
    interpolate_p1,
    sl_monotone_step,
    uniform_controls,
)
from hjfilter.schemes.solver import (
    VARIANTS,
    RunResult,
    SchemeConfig,
    Stepper,
    build_stepper,
    evolve,
)
from hjfilter.schemes.steady import SteadyResult, steady_solve
from hjfilter.schemes.steps import (
    Projection,
    StepReport,
    filtered_step,
    high_order_euler_step,
    monotone_step,
    rk2_compose,
)

__all__ = [
    "EpsilonRule",
    "compute_epsilon",
    "estimate_switching_constant",
    "FILTERS",
    "FilterFunction",
    "FroeseOberman",
    "NewFilter",
    "filter_argument",
    "filter_eval",
    "get_filter",
    "LIMITERS",
    "limit_high_order_step",
    "limiter_1d",
    "limiter_clamp_2d",
    "obstacle_step",
    "obstacle_values",
    "ControlModel",
    "FootPointOutsideDomain",
    "interpolate_p1",
    "sl_monotone_step",
    "uniform_controls",
    "VARIANTS",
    "RunResult",
    "SchemeConfig",
    "Stepper",
    "build_stepper",
    "evolve",
    "SteadyResult",
    "steady_solve",
    "Projection",
    "StepReport",
    "filtered_step",
    "high_order_euler_step",
    "monotone_step",
    "rk2_compose",
]
