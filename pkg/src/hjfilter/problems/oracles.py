"""
Brute-force exact-solution oracles.

These evaluate variational formulas by dense sampling and are used to
cross-check the closed forms of the benchmark problems. Sampling is
deterministic (uniform lattices, endpoints included).
"""

import math
from typing import Callable, Tuple

import numpy as np

from hjfilter.problems.base import OracleConfig

DEFAULT_ORACLE = OracleConfig()

# query points per vectorised block
_CHUNK = 256


def _samples(half_width: float, points_per_unit: int) -> np.ndarray:
    n = max(2, math.ceil(2.0 * half_width * points_per_unit) + 1)
    return np.linspace(-half_width, half_width, n)


def min_over_interval(
    v0: Callable[[np.ndarray], np.ndarray],
    t: float,
    x: np.ndarray,
    config: OracleConfig = DEFAULT_ORACLE,
) -> np.ndarray:
    """
    min over |y - x| <= t of v0(y), the solution of v_t + |v_x| = 0.
    
    Args:
        v0: Initial data (vectorised)
        t: Time (>= 0)
        x: Query points
        config: Sampling resolution
        
    Returns:
        Oracle values at x
    """
    x = np.asarray(x, dtype=float)
    if t == 0:
        return np.asarray(v0(x), dtype=float)
    offsets = _samples(t, config.points_per_unit)
    flat = x.ravel()
    out = np.empty_like(flat)
    for start in range(0, flat.size, _CHUNK):
        block = flat[start:start + _CHUNK]
        out[start:start + _CHUNK] = v0(block[:, None] + offsets[None, :]).min(axis=1)
    return out.reshape(x.shape)


def hopf_lax_1d(
    v0: Callable[[np.ndarray], np.ndarray],
    t: float,
    x: np.ndarray,
    y_bounds: Tuple[float, float],
    config: OracleConfig = DEFAULT_ORACLE,
) -> np.ndarray:
    """
    min over y in ``y_bounds`` of v0(y) + (x - y)^2 / (2t), the solution of
    v_t + (v_x)^2/2 = 0.
    
    ``y_bounds`` must contain every minimiser; for compactly supported v0 it
    is enough to cover the support and the query points.
    """
    x = np.asarray(x, dtype=float)
    if t == 0:
        return np.asarray(v0(x), dtype=float)
    lo, hi = y_bounds
    n = max(2, math.ceil((hi - lo) * config.points_per_unit) + 1)
    y = np.linspace(lo, hi, n)
    vy = v0(y)
    flat = x.ravel()
    out = np.empty_like(flat)
    for start in range(0, flat.size, _CHUNK):
        block = flat[start:start + _CHUNK]
        out[start:start + _CHUNK] = (
            vy[None, :] + np.square(block[:, None] - y[None, :]) / (2.0 * t)
        ).min(axis=1)
    return out.reshape(x.shape)


def min_over_ball_2d(
    v0: Callable[[np.ndarray, np.ndarray], np.ndarray],
    t: float,
    x: np.ndarray,
    y: np.ndarray,
    config: OracleConfig = DEFAULT_ORACLE,
) -> np.ndarray:
    """
    min over |q - p| <= t of v0(q), the solution of v_t + |grad v| = 0.
    
    The disc is sampled on a square lattice of spacing 1/points_per_unit_2d
    plus its boundary circle. Intended for a handful of query points.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if t == 0:
        return np.asarray(v0(x, y), dtype=float)
    axis = _samples(t, config.points_per_unit_2d)
    ox, oy = np.meshgrid(axis, axis, indexing="ij")
    inside = np.hypot(ox, oy) <= t
    n_circle = max(8, math.ceil(2.0 * math.pi * t * config.points_per_unit_2d))
    theta = np.linspace(0.0, 2.0 * math.pi, n_circle, endpoint=False)
    dx = np.concatenate([ox[inside], t * np.cos(theta)])
    dy = np.concatenate([oy[inside], t * np.sin(theta)])
    
    px, py = np.broadcast_arrays(x, y)
    out = np.empty(px.shape)
    for index in np.ndindex(px.shape):
        out[index] = np.min(v0(px[index] + dx, py[index] + dy))
    return out
