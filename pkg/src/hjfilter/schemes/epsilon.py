"""
Switching parameter eps for the filtered scheme.
"""

import math
from dataclasses import dataclass

EPSILON_MODES = ("linear", "capped")


@dataclass(frozen=True)
class EpsilonRule:
    """
    eps = c1*dx ("linear") or min(c1*dx, c0_cap*sqrt(dx)) ("capped").
    
    The cap keeps eps <= c0_cap*sqrt(dx), which is what the convergence
    estimate needs; c1 controls where the high-order scheme is kept.
    """
    
    c1: float = 5.0
    c0_cap: float = 1.0
    mode: str = "linear"
    
    def __post_init__(self):
        if self.mode not in EPSILON_MODES:
            raise ValueError(f"Unknown epsilon mode '{self.mode}'. Available: {list(EPSILON_MODES)}")
        if not self.c1 > 0:
            raise ValueError(f"c1 must be positive, got {self.c1}")
        if not self.c0_cap > 0:
            raise ValueError(f"c0_cap must be positive, got {self.c0_cap}")


def compute_epsilon(rule: EpsilonRule, dx: float) -> float:
    """
    Evaluate an EpsilonRule on a mesh step.
    
    Args:
        rule: Epsilon rule
        dx: Mesh step (the largest spacing on 2D grids)
        
    Returns:
        eps > 0
    """
    if not dx > 0:
        raise ValueError(f"dx must be positive, got {dx}")
    eps = rule.c1 * dx
    if rule.mode == "capped":
        eps = min(eps, rule.c0_cap * math.sqrt(dx))
    return eps


def estimate_switching_constant(vxx_bound: float, dh_spread: float) -> float:
    """
    Advisory lower bound for c1: (1/2) * sup|v_xx| * sup|dh/du+ - dh/du-|.
    
    With c1 at least this value the filter keeps the high-order step where
    the solution is smooth.
    """
    if vxx_bound < 0 or dh_spread < 0:
        raise ValueError(f"Bounds must be non-negative, got ({vxx_bound}, {dh_spread})")
    return 0.5 * vxx_bound * dh_spread
