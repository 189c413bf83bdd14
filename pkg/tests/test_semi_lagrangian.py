"""
Tests for the semi-Lagrangian monotone step.
"""

import numpy as np
import pytest

from hjfilter.mesh import Dirichlet, Field, Periodic, build_grid_1d
from hjfilter.schemes import (
    ControlModel,
    FootPointOutsideDomain,
    interpolate_p1,
    sl_monotone_step,
    uniform_controls,
)


def _constant_velocity(speed):
    return lambda x, a, b: np.full_like(x, speed)


class TestInterpolation:
    """Tests for the P1 interpolant."""
    
    def test_cell_midpoint(self, unit_grid, zero_dirichlet):
        """Test the midpoint between 0 and 1."""
        u = Field(np.array([0.0, 1.0, 0.0, 0.0, 0.0]), unit_grid)
        assert interpolate_p1(u, np.array([0.5]), zero_dirichlet)[0] == pytest.approx(0.5)
    
    def test_ghost_region(self, unit_grid):
        """Test interpolation between the last node and its Dirichlet ghost."""
        u = Field(np.full(5, 1.0), unit_grid)
        value = interpolate_p1(u, np.array([4.5]), Dirichlet(0.0))[0]
        assert value == pytest.approx(0.5)
    
    def test_periodic_wrap(self):
        """Test points beyond the right end wrap around."""
        grid = build_grid_1d(0.0, 1.0, 4, endpoint=False)
        u = Field(np.array([0.0, 1.0, 2.0, 3.0]), grid)
        assert interpolate_p1(u, np.array([1.125]), Periodic())[0] == pytest.approx(0.5)
        assert interpolate_p1(u, np.array([0.875]), Periodic())[0] == pytest.approx(1.5)
    
    def test_outside_extended_domain(self, unit_grid, zero_dirichlet):
        """Test that foot points beyond the ghost layer are an error."""
        u = Field(np.zeros(5), unit_grid)
        with pytest.raises(FootPointOutsideDomain):
            interpolate_p1(u, np.array([-3.0]), zero_dirichlet)
    
    def test_needs_1d(self, grid_2d, zero_dirichlet):
        """Test rejection of 2D fields."""
        with pytest.raises(ValueError):
            interpolate_p1(Field(np.zeros(grid_2d.shape), grid_2d), np.zeros(1), zero_dirichlet)


class TestSemiLagrangianStep:
    """Tests for min_a max_b [u](x + tau f) + tau l."""
    
    def test_zero_dynamics_is_identity(self, rng):
        """Test f = 0, l = 0 on a periodic grid."""
        grid = build_grid_1d(0.0, 1.0, 8, endpoint=False)
        u = Field(rng.normal(size=8), grid)
        out = sl_monotone_step(u, ControlModel(f=_constant_velocity(0.0)), 0.1, Periodic())
        assert np.allclose(out.values, u.values)
    
    def test_shift_by_one_cell(self):
        """Test f = -1, tau = dx reproduces exact advection of affine data."""
        grid = build_grid_1d(0.0, 1.0, 10)
        bc = Dirichlet(lambda t, x: 3.0 * (x - t) + 1.0)
        u = Field.from_function(grid, lambda x: 3.0 * x + 1.0)
        out = sl_monotone_step(u, ControlModel(f=_constant_velocity(-1.0)), grid.dx, bc)
        assert np.allclose(out.values, 3.0 * (grid.nodes - grid.dx) + 1.0)
    
    def test_periodic_shift(self, rng):
        """Test f = +1, tau = dx rolls periodic data by one node."""
        grid = build_grid_1d(0.0, 1.0, 8, endpoint=False)
        u = Field(rng.normal(size=8), grid)
        out = sl_monotone_step(u, ControlModel(f=_constant_velocity(1.0)), grid.dx, Periodic())
        assert np.allclose(out.values, np.roll(u.values, -1))
    
    def test_eikonal_controls_take_interval_min(self, hat_field, zero_dirichlet):
        """Test that controls {-1, 0, 1} with tau = dx give the 3-point minimum."""
        control = ControlModel(f=lambda x, a, b: np.full_like(x, a), A=(-1.0, 0.0, 1.0))
        out = sl_monotone_step(hat_field, control, 1.0, zero_dirichlet)
        assert np.all(out.values == 0.0)
    
    def test_running_cost(self, unit_grid):
        """Test that l is added with weight tau."""
        u = Field(np.full(5, 2.0), unit_grid)
        control = ControlModel(f=_constant_velocity(0.0), ell=lambda x, a, b: np.full_like(x, 3.0))
        out = sl_monotone_step(u, control, 0.5, Dirichlet(2.0))
        assert np.allclose(out.values[1:-1], 3.5)
    
    def test_foot_point_outside(self, unit_grid, zero_dirichlet):
        """Test that large velocities raise instead of extrapolating."""
        u = Field(np.zeros(5), unit_grid)
        with pytest.raises(FootPointOutsideDomain):
            sl_monotone_step(u, ControlModel(f=_constant_velocity(-10.0)), 1.0, zero_dirichlet)
    
    def test_needs_1d(self, grid_2d, zero_dirichlet):
        """Test that the step is 1D only."""
        u = Field(np.zeros(grid_2d.shape), grid_2d)
        with pytest.raises(ValueError):
            sl_monotone_step(u, ControlModel(f=_constant_velocity(0.0)), 0.1, zero_dirichlet)


class TestControlModel:
    """Tests for control sets."""
    
    def test_empty_controls_rejected(self):
        """Test that A must be non-empty."""
        with pytest.raises(ValueError):
            ControlModel(f=_constant_velocity(0.0), A=())
    
    def test_uniform_controls(self):
        """Test equispaced controls with endpoints."""
        assert uniform_controls(-2.0, 2.0, 5) == (-2.0, -1.0, 0.0, 1.0, 2.0)
        with pytest.raises(ValueError):
            uniform_controls(0.0, 1.0, 1)
    
    def test_max_speed(self, unit_grid):
        """Test sup |f| over nodes and controls."""
        control = ControlModel(f=lambda x, a, b: a * np.ones_like(x), A=(-3.0, 1.0))
        assert control.max_speed(unit_grid.nodes) == pytest.approx(3.0)
