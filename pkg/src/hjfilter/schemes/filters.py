"""
Filter functions F used to blend a monotone step with a high-order step.

The filtered update is S^F = S^M + eps*tau * F((S^A - S^M) / (eps*tau)).
"""

from typing import Dict

import numpy as np


class FilterFunction:
    """Bounded odd function F with F(0) = 0 and |F| <= 1."""
    
    name: str = "base"
    
    def __call__(self, x) -> np.ndarray:
        raise NotImplementedError
    
    def blend(self, sm: np.ndarray, sa: np.ndarray, eps_tau: float) -> np.ndarray:
        """
        Filtered combination of monotone values ``sm`` and high-order values ``sa``.
        
        Non-finite high-order values give an infinite filter argument, so the
        node falls back to the monotone value.
        """
        return sm + eps_tau * self(filter_argument(sm, sa, eps_tau))
    
    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class NewFilter(FilterFunction):
    """F(x) = x on |x| <= 1 (closed), 0 elsewhere."""
    
    name = "new"
    
    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.where(np.abs(x) <= 1.0, x, 0.0)
    
    def blend(self, sm: np.ndarray, sa: np.ndarray, eps_tau: float) -> np.ndarray:
        # select rather than add back, so accepted nodes equal S^A exactly
        ratio = filter_argument(sm, sa, eps_tau)
        return np.where(np.abs(ratio) <= 1.0, sa, sm)


class FroeseOberman(FilterFunction):
    """F(x) = sign(x) max(1 - ||x| - 1|, 0), a continuous hat on [-2, 2]."""
    
    name = "fo"
    
    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        with np.errstate(invalid="ignore"):
            return np.sign(x) * np.maximum(1.0 - np.abs(np.abs(x) - 1.0), 0.0)


def filter_argument(sm: np.ndarray, sa: np.ndarray, eps_tau: float) -> np.ndarray:
    """(S^A - S^M) / (eps*tau), with non-finite entries mapped to +inf."""
    if not eps_tau > 0:
        raise ValueError(f"eps*tau must be positive, got {eps_tau}")
    with np.errstate(invalid="ignore", over="ignore"):
        ratio = (np.asarray(sa, dtype=float) - np.asarray(sm, dtype=float)) / eps_tau
    return np.where(np.isfinite(ratio), ratio, np.inf)


def filter_eval(F: FilterFunction, x) -> np.ndarray:
    """Evaluate F at x."""
    return F(x)


FILTERS: Dict[str, FilterFunction] = {
    "new": NewFilter(),
    "fo": FroeseOberman(),
}


def get_filter(name: str) -> FilterFunction:
    """
    Look up a filter by name.
    
    Raises:
        ValueError: If the name is unknown
    """
    if name not in FILTERS:
        raise ValueError(f"Unknown filter '{name}'. Available: {list(FILTERS.keys())}")
    return FILTERS[name]
