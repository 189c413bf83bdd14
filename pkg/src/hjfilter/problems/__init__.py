"""
Benchmark problems, their exact solutions and brute-force oracles.
"""

from hjfilter.problems.base import PROBLEMS, OracleConfig, Problem, get_problem
from hjfilter.problems.examples import (
    example1_eikonal,
    example2_burgers,
    example3_rotation,
    example4_eikonal2d,
    example5_steady_eikonal,
    example6_obstacle_advection,
    example7_obstacle_eikonal,
    identity_problem,
)
from hjfilter.problems.oracles import hopf_lax_1d, min_over_ball_2d, min_over_interval

__all__ = [
    "PROBLEMS",
    "OracleConfig",
    "Problem",
    "get_problem",
    "example1_eikonal",
    "example2_burgers",
    "example3_rotation",
    "example4_eikonal2d",
    "example5_steady_eikonal",
    "example6_obstacle_advection",
    "example7_obstacle_eikonal",
    "identity_problem",
    "hopf_lax_1d",
    "min_over_ball_2d",
    "min_over_interval",
]
