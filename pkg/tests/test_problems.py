"""
Tests for the problem registry, exact solutions and brute-force oracles.
"""

import math

import numpy as np
import pytest

from hjfilter.mesh import TimeGrid
from hjfilter.problems import OracleConfig, get_problem, hopf_lax_1d, min_over_ball_2d, min_over_interval
from hjfilter.problems.base import PROBLEMS
from hjfilter.problems.examples import (
    OBSTACLE_SINGULAR_POINTS,
    STEADY_A,
    STEADY_X0,
    bump,
    burgers_data,
    burgers_exact,
    example1_eikonal,
    obstacle,
    obstacle_advection_exact,
    obstacle_data,
    obstacle_eikonal_exact,
    obstacle_eikonal_free,
    obstacle_mask,
    rotation_data,
    steady_exact,
    steady_source,
    two_humps,
)

KEYS = ["ex1a", "ex1b", "ex2", "ex3", "ex4", "ex5", "ex6", "ex7", "identity"]
TIME_DEPENDENT = ["ex1a", "ex1b", "ex2", "ex3", "ex4", "ex6", "ex7", "identity"]


class TestRegistry:
    """Tests for problem lookup."""
    
    def test_all_registered(self):
        """Test that every benchmark is available."""
        assert set(KEYS) <= set(PROBLEMS)
    
    def test_unknown_problem(self):
        """Test that the error lists the available keys."""
        with pytest.raises(ValueError, match="Available"):
            get_problem("ex9")
    
    def test_example1_selector(self):
        """Test the data switch of the eikonal example."""
        assert example1_eikonal("reversed").limiter == "extrema1d"
        assert example1_eikonal("regular").limiter == "off"
        with pytest.raises(ValueError):
            example1_eikonal("flipped")
    
    @pytest.mark.parametrize("key", KEYS)
    def test_default_schemes_valid(self, key):
        """Test that default schemes and levels are usable."""
        problem = get_problem(key)
        assert len(problem.schemes) >= 1
        assert all(b == 2 * a for a, b in zip(problem.levels, problem.levels[1:]))


class TestExactAtInitialTime:
    """exact(0, .) must reproduce the initial data."""
    
    @pytest.mark.parametrize("key", TIME_DEPENDENT)
    def test_initial_data(self, key):
        """Test exact(0, x) = v0(x) at the nodes."""
        problem = get_problem(key)
        grid = problem.build_grid(20)
        if problem.dim == 1:
            v0 = problem.v0(grid.nodes)
        else:
            v0 = problem.v0(*grid.mesh())
        assert np.allclose(problem.exact_values(grid, 0.0), v0, atol=1e-14)


class TestEikonal1D:
    """Tests for the 1D eikonal examples."""
    
    def test_regular_values(self):
        """Test peak value, support and the closed form at the origin."""
        problem = get_problem("ex1a")
        assert problem.v0(np.array([0.0]))[0] == 1.0
        assert problem.exact(0.3, np.array([0.0]))[0] == pytest.approx((1 - 0.09) ** 4)
        x = np.array([-1.5, 1.3, 1.8])
        assert np.all(problem.exact(0.3, x) == 0.0)
    
    @pytest.mark.parametrize("key", ["ex1a", "ex1b"])
    def test_matches_oracle(self, key):
        """Test the closed form against the sampled interval minimum."""
        problem = get_problem(key)
        x = np.linspace(-2.0, 2.0, 81)
        for t in (0.1, 0.3):
            oracle = min_over_interval(problem.v0, t, x)
            assert np.allclose(problem.exact(t, x), oracle, atol=1e-6)
    
    def test_settings(self):
        """Test domain, final time and CFL of the eikonal tables."""
        problem = get_problem("ex1a")
        assert problem.domain == (-2.0, 2.0)
        assert problem.T == pytest.approx(0.3)
        assert problem.cfl == pytest.approx(0.37)


class TestBurgers:
    """Tests for the Burgers example."""
    
    def test_closed_form_matches_hopf_lax(self):
        """Test burgers_exact against the sampled Hopf-Lax formula."""
        x = np.linspace(-1.5, 1.5, 31)
        for s in (0.1, 0.25, 0.4):
            oracle = hopf_lax_1d(burgers_data, s, x, y_bounds=(-2.0, 2.0))
            assert np.allclose(burgers_exact(s, x), oracle, atol=1e-6)
    
    def test_support_and_continuity(self):
        """Test zero beyond |x| = 1 and continuity at |x| = 1 - 2s."""
        s = 0.25
        assert np.all(burgers_exact(s, np.array([-1.5, 1.0, 1.7])) == 0.0)
        edge = 1.0 - 2.0 * s
        left = burgers_exact(s, np.array([edge - 1e-9]))[0]
        right = burgers_exact(s, np.array([edge + 1e-9]))[0]
        assert left == pytest.approx(right, abs=1e-8)
        assert left == pytest.approx(2.0 * s, abs=1e-8)
    
    def test_shifted_data(self):
        """Test w(0, x) = v(0.1, x)."""
        problem = get_problem("ex2")
        x = np.linspace(-2.0, 2.0, 9)
        assert np.allclose(problem.v0(x), burgers_exact(0.1, x))
    
    def test_valid_range(self):
        """Test that the closed form refuses s >= 1/2."""
        with pytest.raises(ValueError):
            burgers_exact(0.5, np.zeros(3))


class TestRotation:
    """Tests for the 2D rotation example."""
    
    def test_quarter_turn(self):
        """Test that a quarter turn carries (1, 0) to (0, 1)."""
        problem = get_problem("ex3")
        value = problem.exact(math.pi / 2, np.array([0.0]), np.array([1.0]))[0]
        assert value == pytest.approx(rotation_data(1.0, 0.0))
    
    def test_zero_level_set(self):
        """Test that the data vanish on the circle of radius 0.5."""
        angles = np.linspace(0.0, 2 * math.pi, 16)
        values = rotation_data(1.0 + 0.5 * np.cos(angles), 0.5 * np.sin(angles))
        assert np.allclose(values, 0.0)
    
    def test_far_field(self):
        """Test the Dirichlet value away from the hump."""
        problem = get_problem("ex3")
        assert problem.bc.value == 0.5
        assert rotation_data(-2.0, -2.0) == pytest.approx(0.5)


class TestTwoHumps:
    """Tests for the 2D eikonal example."""
    
    def test_zero_level_sets(self):
        """Test zeros on both circles."""
        assert two_humps(1.5, 0.0) == pytest.approx(0.0)
        assert two_humps(-1.0, 0.5) == pytest.approx(0.0)
    
    def test_far_point_unchanged(self):
        """Test that points farther than t from both supports keep 0.5."""
        problem = get_problem("ex4")
        assert problem.exact(0.6, np.array([0.0]), np.array([2.5]))[0] == pytest.approx(0.5)
    
    def test_matches_ball_oracle(self):
        """Test the radial reduction against the sampled disc minimum."""
        problem = get_problem("ex4")
        config = OracleConfig(points_per_unit_2d=200)
        x = np.array([0.3, 1.9, -0.5, 0.0])
        y = np.array([0.2, 0.4, -0.9, 0.0])
        oracle = min_over_ball_2d(problem.v0, 0.6, x, y, config)
        assert np.allclose(problem.exact(0.6, x, y), oracle, atol=1e-3)


class TestSteadyEikonal:
    """Tests for the steady example."""
    
    def test_constants(self):
        """Test x0 and the continuity of the two branches."""
        assert STEADY_X0 == pytest.approx(0.64685, abs=1e-4)
        left = STEADY_X0**3 + STEADY_A * STEADY_X0
        right = 1.0 + STEADY_A - STEADY_A * STEADY_X0 - STEADY_X0**3
        assert left == pytest.approx(right, abs=1e-12)
        assert steady_source(STEADY_X0) > 0
    
    def test_boundary_values(self):
        """Test v(0) = v(1) = 0."""
        assert steady_exact(np.array([0.0, 1.0])) == pytest.approx([0.0, 0.0], abs=1e-12)
    
    def test_solves_eikonal(self, rng):
        """Test |v_x| = f away from the kink."""
        x = rng.uniform(0.01, 0.99, 1000)
        x = x[np.abs(x - STEADY_X0) > 1e-3]
        h = 1e-6
        slope = (steady_exact(x + h) - steady_exact(x - h)) / (2 * h)
        assert np.allclose(np.abs(slope), steady_source(x), atol=1e-4)
    
    def test_problem_settings(self):
        """Test steady flag, norm and columns."""
        problem = get_problem("ex5")
        assert problem.steady
        assert problem.norm == "linf"
        assert problem.schemes == ("filtered-centered", "centered", "filtered-eno2")


class TestObstacleProblems:
    """Tests for the obstacle examples."""
    
    def test_advection_branch_formula(self):
        """Test the piecewise form at t = 0.5."""
        t = 0.5
        x = np.linspace(-1.0, 1.0, 401)
        indicator = np.where((x >= 0.5) & (x <= 1.0), 1.0, -np.inf)
        expected = np.maximum(np.maximum(obstacle_data(x - t), obstacle(x)), indicator)
        assert np.allclose(obstacle_advection_exact(t, x), expected, atol=1e-12)
    
    @pytest.mark.parametrize("exact", [obstacle_advection_exact, obstacle_eikonal_exact])
    def test_above_obstacle(self, exact):
        """Test v >= g for several times."""
        x = np.linspace(-1.0, 1.0, 201)
        for t in (0.0, 0.1, 0.2, 0.4):
            assert np.all(exact(t, x) >= obstacle(x) - 1e-12)
    
    def test_eikonal_free_matches_oracle(self):
        """Test the obstacle-free eikonal solution against the interval minimum."""
        x = np.linspace(-1.0, 0.98, 100)
        for t in (0.1, 0.2, 0.3):
            oracle = min_over_interval(obstacle_data, t, x)
            assert np.allclose(obstacle_eikonal_free(t, x), oracle, atol=1e-6)
    
    def test_eikonal_flat_bottom(self):
        """Test the value -0.5 across the trough at t = 0.2."""
        x = np.array([-0.65, -0.5, -0.35])
        assert np.allclose(obstacle_eikonal_exact(0.2, x), -0.5)
    
    def test_mask_excludes_singular_points(self):
        """Test that nodes near x = 0.5 and 2/3 are left out."""
        problem = get_problem("ex6")
        grid = problem.build_grid(40)
        mask = obstacle_mask(grid)
        assert not mask[np.argmin(np.abs(grid.nodes - 0.5))]
        assert not mask[np.argmin(np.abs(grid.nodes - 2.0 / 3.0))]
        assert mask[0]
    
    def test_mask_width_is_fixed(self):
        """Test that the excluded band does not shrink with the mesh."""
        problem = get_problem("ex6")
        for M in (40, 160, 640):
            grid = problem.build_grid(M)
            x = grid.nodes
            mask = obstacle_mask(grid)
            near = np.abs(x - 2.0 / 3.0) < 0.045
            far = np.all([np.abs(x - s) > 0.055 for s in OBSTACLE_SINGULAR_POINTS], axis=0)
            assert not np.any(mask[near])
            assert np.all(mask[far])
        grid = problem.build_grid(160)
        assert obstacle_mask(grid, delta=0.01).sum() > obstacle_mask(grid).sum()
    
    def test_eikonal_obstacle_uses_extrema_limiter(self):
        """Test the Example 7 default limiter."""
        assert get_problem("ex7").limiter == "extrema1d"
    
    def test_step_counts(self):
        """Test N = T/tau exactly for the obstacle grids."""
        problem = get_problem("ex6")
        for M, expected in ((40, 20), (80, 40)):
            grid = problem.build_grid(M)
            assert TimeGrid.from_step(problem.T, problem.tau_max(grid)).N == expected


class TestBumpHelpers:
    """Tests for shared profiles."""
    
    def test_bump(self):
        """Test the compact support of (1 - x^2)^4."""
        assert bump(np.array([0.0, 1.0, 1.5])).tolist() == [1.0, 0.0, 0.0]
