"""
Convergence-order checks of the benchmark studies.

Each class reproduces one group of tables on its coarser levels and asserts
the observed orders fall inside the expected bands. The 2D and steady studies
are marked slow.
"""

import math

import pytest

from hjfilter.analysis import refinement_study
from hjfilter.problems import get_problem


def _errors(rows):
    return [row.error for row in rows]


def _orders(rows):
    return [row.order for row in rows[1:]]


class TestEikonal1D:
    """Regular and reversed eikonal data."""
    
    def test_filtered_second_order_regular(self):
        """Test the filtered scheme reaches second order on regular data."""
        rows = refinement_study(get_problem("ex1a"), "filtered-centered", [80, 160, 320, 640])
        assert all(order >= 1.8 for order in _orders(rows))
    
    def test_centered_stagnates(self):
        """Test that the centered scheme error stays above 1e-1."""
        rows = refinement_study(get_problem("ex1a"), "centered", [40, 80, 160])
        assert all(error > 0.1 for error in _errors(rows))
    
    def test_eno2_order_regular(self):
        """Test the ENO2 order band on regular data."""
        rows = refinement_study(get_problem("ex1a"), "eno2", [40, 80, 160, 320])
        assert all(1.7 <= order <= 2.1 for order in _orders(rows))
    
    def test_monotone_first_order(self):
        """Test the monotone scheme converges at roughly first order."""
        rows = refinement_study(get_problem("ex1a"), "monotone", [40, 80, 160])
        assert all(0.5 < order < 1.5 for order in _orders(rows))
    
    def test_reversed_data_with_limiter(self):
        """Test the limited filtered scheme is second order on reversed data."""
        rows = refinement_study(get_problem("ex1b"), "filtered-centered", [80, 160, 320, 640])
        assert all(1.85 <= order <= 2.15 for order in _orders(rows))
    
    def test_reversed_data_centered_blows_up(self):
        """Test that the centered error grows with refinement on reversed data."""
        rows = refinement_study(get_problem("ex1b"), "centered", [160, 320, 640])
        assert rows[-1].diverged or rows[-1].error > 100 * rows[0].error
    
    def test_reversed_data_eno2_order(self):
        """Test the ENO2 order band on reversed data."""
        rows = refinement_study(get_problem("ex1b"), "eno2", [80, 160, 320])
        assert all(1.47 <= order <= 1.87 for order in _orders(rows))
    
    @pytest.mark.parametrize("variant", ["sl", "filtered-sl"])
    def test_semi_lagrangian_variants(self, variant):
        """Test the semi-Lagrangian baselines converge."""
        rows = refinement_study(get_problem("ex1a"), variant, [40, 80, 160])
        assert rows[-1].error < rows[0].error


class TestBurgers:
    """Smooth Burgers data."""
    
    @pytest.mark.parametrize("variant", ["filtered-centered", "centered"])
    def test_order_band(self, variant):
        """Test the order band of the filtered and centered columns."""
        rows = refinement_study(get_problem("ex2"), variant, [40, 80, 160])
        assert all(1.56 <= order <= 1.91 for order in _orders(rows))
    
    def test_filtered_matches_centered(self):
        """Test that the filter keeps the centered step on smooth data."""
        problem = get_problem("ex2")
        filtered = refinement_study(problem, "filtered-centered", [40, 80, 160])
        centered = refinement_study(problem, "centered", [40, 80, 160])
        for f_row, c_row in zip(filtered, centered):
            assert f_row.error == pytest.approx(c_row.error, rel=1e-2)
    
    def test_eno2_converges(self):
        """Test error decrease of the ENO2 column."""
        rows = refinement_study(get_problem("ex2"), "eno2", [40, 80, 160])
        assert all(math.isfinite(e) for e in _errors(rows))
        assert rows[-1].error < rows[0].error
    
    def test_high_order_fraction_reported(self):
        """Test that filtered runs record how often S^A was kept."""
        rows = refinement_study(get_problem("ex2"), "filtered-centered", [40])
        assert 0.0 < rows[0].high_order_fraction <= 1.0


@pytest.mark.slow
class TestTwoDimensional:
    """Rotation and 2D eikonal."""
    
    def test_rotation_second_order(self):
        """Test the filtered rotation order and its agreement with centered."""
        problem = get_problem("ex3")
        filtered = refinement_study(problem, "filtered-centered", [40, 80, 160])
        centered = refinement_study(problem, "centered", [40, 80, 160])
        assert all(order >= 1.85 for order in _orders(filtered))
        for f_row, c_row in zip(filtered, centered):
            assert f_row.error == pytest.approx(c_row.error, rel=1e-2)
    
    def test_two_humps_order(self):
        """Test the filtered order with the clamp limiter."""
        rows = refinement_study(get_problem("ex4"), "filtered-centered", [50, 100, 200])
        assert all(order >= 1.75 for order in _orders(rows))


@pytest.mark.slow
class TestSteady:
    """Steady eikonal with source."""
    
    def test_centered_diverges(self):
        """Test that the centered scheme gives a NaN row instead of huge errors."""
        rows = refinement_study(get_problem("ex5"), "centered", [50, 100])
        assert all(row.diverged for row in rows)
        assert all(math.isnan(row.error) for row in rows)
        assert all(row.order is None for row in rows)
    
    def test_filtered_eno2_second_order(self):
        """Test the filtered ENO2 order band."""
        rows = refinement_study(get_problem("ex5"), "filtered-eno2", [50, 100, 200, 400])
        assert all(1.87 <= order <= 2.1 for order in _orders(rows))
    
    def test_filtered_centered_converges(self):
        """Test that the filtered centered scheme converges above first order."""
        rows = refinement_study(get_problem("ex5"), "filtered-centered", [50, 100, 200])
        assert not any(row.diverged for row in rows)
        assert all(order > 1.2 for order in _orders(rows))


class TestObstacles:
    """Obstacle problems."""
    
    def test_advection_second_order(self):
        """Test masked L-infinity convergence of the filtered scheme."""
        rows = refinement_study(get_problem("ex6"), "filtered-centered", [40, 80, 160, 320])
        assert all(order >= 1.6 for order in _orders(rows))
    
    def test_eikonal_obstacle_filtered_order(self):
        """Test the limited filtered scheme order on every refinement."""
        rows = refinement_study(
            get_problem("ex7"), "filtered-centered", [40, 80, 160, 320, 640]
        )
        assert all(order >= 1.9 for order in _orders(rows))
    
    def test_eikonal_obstacle_eno2(self):
        """Test the ENO2 column produces finite decreasing errors."""
        rows = refinement_study(get_problem("ex7"), "eno2", [40, 80, 160])
        assert all(math.isfinite(e) for e in _errors(rows))
        assert rows[-1].error < rows[0].error
