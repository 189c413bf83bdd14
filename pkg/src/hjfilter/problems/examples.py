"""
Benchmark problems.

Identifiers: ex1a/ex1b (eikonal, regular and reversed data), ex2 (Burgers),
ex3 (2D rotation), ex4 (2D eikonal, two circles), ex5 (steady eikonal),
ex6 (advection with obstacle), ex7 (eikonal with obstacle), identity (T = 0).
"""

import math

import numpy as np

from hjfilter.hamiltonians.analytic import (
    advection_1d,
    burgers_1d,
    eikonal_1d,
    eikonal_2d,
    eikonal_with_source,
    rotation_2d,
)
from hjfilter.hamiltonians.monotone import (
    UPWIND_EIKONAL,
    h_lf_2d,
    h_upwind_advection_1d,
    h_upwind_advection_2d,
    h_upwind_eikonal_source,
    upwind_burgers,
)
from hjfilter.mesh.boundary import Dirichlet, Periodic
from hjfilter.problems.base import Problem, register_problem
from hjfilter.schemes.epsilon import EpsilonRule
from hjfilter.schemes.semi_lagrangian import ControlModel, uniform_controls

EIKONAL_CONTROLS = (-1.0, 0.0, 1.0)
BURGERS_CONTROL_COUNT = 201

HUMP_RADIUS = 0.5
BURGERS_SHIFT = 0.1

OBSTACLE_SPEED = 1.0
OBSTACLE_SINGULAR_POINTS = (-0.1349733, 0.5, 2.0 / 3.0)
OBSTACLE_GUARD_WIDTH = 0.05


def _full_range(x):
    ones = np.ones_like(np.asarray(x, dtype=float))
    return -ones, ones


def _eikonal_control(ell=None) -> ControlModel:
    if ell is None:
        return ControlModel(f=lambda x, a, b: np.full_like(x, a), A=EIKONAL_CONTROLS)
    return ControlModel(f=lambda x, a, b: np.full_like(x, a), ell=ell, A=EIKONAL_CONTROLS)


# Example 1: v_t + |v_x| = 0 on (-2, 2)

def bump(x):
    """max(0, 1 - x^2)^4."""
    return np.maximum(0.0, 1.0 - np.square(x)) ** 4


def _eikonal_problem(key: str, reversed_data: bool) -> Problem:
    if reversed_data:
        def v0(x):
            return -bump(x)
        
        def exact(t, x):
            return -bump(np.maximum(0.0, np.abs(x) - t))
    else:
        v0 = bump
        
        def exact(t, x):
            # bump is unimodal, so the interval minimum sits at an endpoint
            return np.minimum(bump(x - t), bump(x + t))
    
    return Problem(
        key=key,
        title="Eikonal, " + ("reversed" if reversed_data else "regular") + " data",
        dim=1,
        H=eikonal_1d(),
        hM=UPWIND_EIKONAL,
        domain=(-2.0, 2.0),
        v0=v0,
        bc=Dirichlet(0.0),
        exact=exact,
        T=0.3,
        cfl=0.37,
        c0=1.0,
        epsilon=EpsilonRule(c1=5.0),
        limiter="extrema1d" if reversed_data else "off",
        velocity_range=_full_range,
        control=_eikonal_control(),
    )


@register_problem("ex1a")
def example1_eikonal_regular() -> Problem:
    return _eikonal_problem("ex1a", reversed_data=False)


@register_problem("ex1b")
def example1_eikonal_reversed() -> Problem:
    return _eikonal_problem("ex1b", reversed_data=True)


def example1_eikonal(data: str = "regular") -> Problem:
    """Example 1 with ``data`` in {"regular", "reversed"}."""
    if data not in ("regular", "reversed"):
        raise ValueError(f"Unknown data '{data}'. Available: ['regular', 'reversed']")
    return _eikonal_problem("ex1a" if data == "regular" else "ex1b", data == "reversed")


# Example 2: v_t + (v_x)^2/2 = 0 with data shifted to a smooth time

def burgers_data(x):
    """max(0, 1 - x^2)."""
    return np.maximum(0.0, 1.0 - np.square(x))


def burgers_exact(s, x):
    """
    Hopf-Lax solution for burgers_data at time s < 1/2.
    
    1 - x^2/(1-2s) on |x| <= 1-2s, (1-|x|)^2/(2s) on 1-2s <= |x| <= 1, 0 beyond.
    """
    x = np.asarray(x, dtype=float)
    if not 0 <= s < 0.5:
        raise ValueError(f"Closed form holds for 0 <= s < 1/2, got {s}")
    if s == 0:
        return burgers_data(x)
    r = np.abs(x)
    inner = 1.0 - 2.0 * s
    return np.where(
        r <= inner,
        1.0 - np.square(x) / inner,
        np.where(r <= 1.0, np.square(1.0 - r) / (2.0 * s), 0.0),
    )


@register_problem("ex2")
def example2_burgers() -> Problem:
    """Burgers HJ with initial data w(0, x) = v(0.1, x); exact w(t, x) = v(t + 0.1, x)."""
    return Problem(
        key="ex2",
        title="Burgers, shifted data",
        dim=1,
        H=burgers_1d(c0=2.0),
        hM=upwind_burgers(c0=2.0),
        domain=(-2.0, 2.0),
        v0=lambda x: burgers_exact(BURGERS_SHIFT, x),
        bc=Dirichlet(0.0),
        exact=lambda t, x: burgers_exact(t + BURGERS_SHIFT, x),
        T=0.3,
        cfl=0.37,
        # the N column of the benchmark table corresponds to c0 = 1
        c0=1.0,
        epsilon=EpsilonRule(c1=5.0),
        velocity_range=lambda x: (np.full_like(x, -2.0), np.full_like(x, 2.0)),
        control=ControlModel(
            f=lambda x, a, b: np.full_like(x, -a),
            ell=lambda x, a, b: np.full_like(x, 0.5 * a * a),
            A=uniform_controls(-2.0, 2.0, BURGERS_CONTROL_COUNT),
        ),
    )


# Examples 3 and 4: 2D humps

def hump_profile(r2, r0: float = HUMP_RADIUS):
    """max(0, (1 - r^2) / (1 - r0^2))^4 for squared radius r2; equals 1 on |r| = r0."""
    return np.maximum(0.0, (1.0 - r2) / (1.0 - r0 * r0)) ** 4


def rotation_data(x, y):
    """0.5 - 0.5 * hump centred at (1, 0); zero level set is the circle of radius 0.5."""
    return 0.5 - 0.5 * hump_profile(np.square(x - 1.0) + np.square(y))


def rotation_exact(t, x, y):
    c, s = math.cos(t), math.sin(t)
    return rotation_data(x * c + y * s, -x * s + y * c)


@register_problem("ex3")
def example3_rotation() -> Problem:
    """v_t - y v_x + x v_y = 0 on (-2.5, 2.5)^2 up to a quarter turn."""
    return Problem(
        key="ex3",
        title="Rotation (2D)",
        dim=2,
        H=rotation_2d(c0=2.5),
        hM=h_upwind_advection_2d(lambda x, y: -y, lambda x, y: x, c0=2.5),
        domain=(-2.5, 2.5, -2.5, 2.5),
        v0=rotation_data,
        bc=Dirichlet(0.5),
        exact=rotation_exact,
        T=math.pi / 2.0,
        cfl=0.37,
        c0=2.5,
        epsilon=EpsilonRule(c1=20.0),
        levels=(20, 40, 80, 160, 320),
    )


_CENTER_A = (1.0, 0.0)
_CENTER_B = (-1.0, 0.0)


def two_humps(x, y):
    """0.5 - 0.5 * max of humps centred at A = (1, 0) and B = (-1, 0)."""
    ha = hump_profile(np.square(x - _CENTER_A[0]) + np.square(y - _CENTER_A[1]))
    hb = hump_profile(np.square(x - _CENTER_B[0]) + np.square(y - _CENTER_B[1]))
    return 0.5 - 0.5 * np.maximum(ha, hb)


def two_humps_exact(t, x, y):
    """
    min of two_humps over the disc of radius t.
    
    Each hump decreases with the distance to its centre, so the disc maximum
    of a hump is its value at distance max(0, d - t).
    """
    da = np.maximum(0.0, np.hypot(x - _CENTER_A[0], y - _CENTER_A[1]) - t)
    db = np.maximum(0.0, np.hypot(x - _CENTER_B[0], y - _CENTER_B[1]) - t)
    return 0.5 - 0.5 * np.maximum(hump_profile(da * da), hump_profile(db * db))


@register_problem("ex4")
def example4_eikonal2d() -> Problem:
    """v_t + |grad v| = 0 on (-3, 3)^2, Lax-Friedrichs h^M, clamp limiter, t = 0.6."""
    H = eikonal_2d()
    return Problem(
        key="ex4",
        title="Eikonal (2D), two circles",
        dim=2,
        H=H,
        hM=h_lf_2d(H, 1.0, 1.0),
        domain=(-3.0, 3.0, -3.0, 3.0),
        v0=two_humps,
        bc=Dirichlet(0.5),
        exact=two_humps_exact,
        T=0.6,
        cfl=0.37,
        c0=1.0,
        epsilon=EpsilonRule(c1=20.0),
        limiter="clamp2d",
        levels=(25, 50, 100, 200, 400),
    )


# Example 5: |v_x| = f(x) on (0, 1), v(0) = v(1) = 0

STEADY_X0 = (2.0 ** (1.0 / 3.0) + 2.0) / (4.0 * 2.0 ** (1.0 / 3.0))
STEADY_A = (1.0 - 2.0 * STEADY_X0**3) / (2.0 * STEADY_X0 - 1.0)


def steady_source(x):
    """f(x) = 3x^2 + a."""
    return 3.0 * np.square(x) + STEADY_A


def steady_exact(x):
    """x^3 + a x on [0, x0]; 1 + a - a x - x^3 on [x0, 1]."""
    x = np.asarray(x, dtype=float)
    return np.where(
        x <= STEADY_X0,
        x**3 + STEADY_A * x,
        1.0 + STEADY_A - STEADY_A * x - x**3,
    )


@register_problem("ex5")
def example5_steady_eikonal() -> Problem:
    """Time marching of v_t + |v_x| = f(x) from v = 0 to its steady state."""
    return Problem(
        key="ex5",
        title="Steady eikonal with source",
        dim=1,
        H=eikonal_with_source(steady_source),
        hM=h_upwind_eikonal_source(steady_source),
        domain=(0.0, 1.0),
        v0=np.zeros_like,
        bc=Dirichlet(0.0),
        exact=lambda t, x: steady_exact(x),
        T=0.0,
        cfl=0.37,
        c0=1.0,
        epsilon=EpsilonRule(c1=5.0),
        norm="linf",
        levels=(50, 100, 200, 400, 800),
        schemes=("filtered-centered", "centered", "filtered-eno2"),
        steady=True,
        velocity_range=_full_range,
        control=_eikonal_control(ell=lambda x, a, b: steady_source(x)),
    )


# Examples 6 and 7: obstacle problems on the periodic interval [-1, 1]

def obstacle(x):
    """g(x) = sin(pi x)."""
    return np.sin(np.pi * x)


def obstacle_data(x):
    """v0(x) = 0.5 + sin(pi x)."""
    return 0.5 + np.sin(np.pi * x)


def _max_sin_on(a, b):
    # max of sin(pi y) over [a, b]; peaks at y = 0.5 + 2k
    k = np.ceil((a - 0.5) / 2.0)
    peak_inside = 0.5 + 2.0 * k <= b
    return np.where(peak_inside, 1.0, np.maximum(np.sin(np.pi * a), np.sin(np.pi * b)))


def obstacle_advection_exact(t, x):
    """
    max(v0(x - t), max over [x - t, x] of g).
    
    Along each characteristic the solution is pushed up to the largest
    obstacle value met so far.
    """
    x = np.asarray(x, dtype=float)
    if t == 0:
        return np.maximum(obstacle_data(x), obstacle(x))
    shift = OBSTACLE_SPEED * t
    return np.maximum(obstacle_data(x - shift), _max_sin_on(x - shift, x))


def obstacle_mask(grid, delta: float = OBSTACLE_GUARD_WIDTH):
    """Exclude nodes within ``delta`` of the advection solution's singular points."""
    x = grid.nodes
    keep = np.ones(x.shape, dtype=bool)
    for s in OBSTACLE_SINGULAR_POINTS:
        keep &= np.abs(x - s) > delta
    return keep


@register_problem("ex6")
def example6_obstacle_advection() -> Problem:
    """min(v_t + v_x, v - g) = 0, periodic, L-infinity error away from singular points."""
    return Problem(
        key="ex6",
        title="Advection with obstacle",
        dim=1,
        H=advection_1d(OBSTACLE_SPEED),
        hM=h_upwind_advection_1d(lambda x: np.full_like(x, OBSTACLE_SPEED), c0=OBSTACLE_SPEED),
        domain=(-1.0, 1.0),
        v0=obstacle_data,
        bc=Periodic(),
        exact=obstacle_advection_exact,
        T=0.5,
        cfl=0.5,
        c0=OBSTACLE_SPEED,
        epsilon=EpsilonRule(c1=5.0),
        obstacle=obstacle,
        norm="linf",
        velocity_range=lambda x: (np.full_like(x, OBSTACLE_SPEED), np.full_like(x, OBSTACLE_SPEED)),
        control=ControlModel(f=lambda x, a, b: np.full_like(x, -a), A=(OBSTACLE_SPEED,)),
        mask=obstacle_mask,
    )


def obstacle_eikonal_free(t, x):
    """
    min over [x - t, x + t] of v0, for t < 1/2.
    
    v0(x + t) left of the trough, -0.5 across it, the smaller endpoint value right of it.
    """
    x = np.asarray(x, dtype=float)
    return np.where(
        x < -0.5 - t,
        obstacle_data(x + t),
        np.where(
            x <= -0.5 + t,
            -0.5,
            np.minimum(obstacle_data(x - t), obstacle_data(x + t)),
        ),
    )


def obstacle_eikonal_exact(t, x):
    return np.maximum(obstacle_eikonal_free(t, x), obstacle(x))


@register_problem("ex7")
def example7_obstacle_eikonal() -> Problem:
    """min(v_t + |v_x|, v - g) = 0, periodic, t = 0.2."""
    return Problem(
        key="ex7",
        title="Eikonal with obstacle",
        dim=1,
        H=eikonal_1d(),
        hM=UPWIND_EIKONAL,
        domain=(-1.0, 1.0),
        v0=obstacle_data,
        bc=Periodic(),
        exact=obstacle_eikonal_exact,
        T=0.2,
        cfl=0.5,
        c0=1.0,
        epsilon=EpsilonRule(c1=5.0),
        limiter="extrema1d",
        obstacle=obstacle,
        schemes=("filtered-centered", "eno2"),
        velocity_range=_full_range,
        control=_eikonal_control(),
    )


@register_problem("identity")
def identity_problem() -> Problem:
    """Zero final time: every scheme returns the exact initial data."""
    return Problem(
        key="identity",
        title="Identity (T = 0)",
        dim=1,
        H=eikonal_1d(),
        hM=UPWIND_EIKONAL,
        domain=(-2.0, 2.0),
        v0=bump,
        bc=Dirichlet(0.0),
        exact=lambda t, x: bump(x),
        T=0.0,
        levels=(10, 20, 40),
        schemes=("filtered-centered", "centered", "eno2"),
        velocity_range=_full_range,
        control=_eikonal_control(),
    )
