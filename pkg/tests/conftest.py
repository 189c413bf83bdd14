"""
Pytest configuration and fixtures.
"""

from pathlib import Path

import numpy as np
import pytest

from hjfilter.mesh import Dirichlet, Field, build_grid_1d, build_grid_2d
from hjfilter.utils.console import set_quiet


@pytest.fixture(autouse=True)
def quiet_console():
    """Silence progress output during tests."""
    set_quiet(True)
    yield
    set_quiet(False)


@pytest.fixture
def project_root():
    """Get project root directory."""
    return Path(__file__).parent.parent


@pytest.fixture
def rng():
    """Seeded random generator."""
    return np.random.default_rng(20240601)


@pytest.fixture
def unit_grid():
    """Five nodes 0..4 with unit spacing."""
    return build_grid_1d(0.0, 4.0, 4)


@pytest.fixture
def grid_2d():
    """Small square 2D grid."""
    return build_grid_2d(0.0, 1.0, 0.0, 1.0, 4, 4)


@pytest.fixture
def hat_field(unit_grid):
    """u = [0, 0, 1, 0, 0] on the unit grid."""
    return Field(np.array([0.0, 0.0, 1.0, 0.0, 0.0]), unit_grid)


@pytest.fixture
def zero_dirichlet():
    return Dirichlet(0.0)


@pytest.fixture
def sample_config(tmp_path):
    """A small benchmark configuration writing under tmp_path."""
    return {
        "run_id": "test_run",
        "output": {
            "root": str(tmp_path / "runs"),
        },
        "tables": [
            {
                "name": "identity_table",
                "problem": "identity",
                "levels": [10, 20],
            },
        ],
    }


@pytest.fixture
def slope_field(rng):
    """Random walks whose difference quotients stay within [-max_slope, max_slope]."""
    
    def make(n, dx, max_slope, offset=0.0):
        steps = rng.uniform(-max_slope, max_slope, n - 1) * dx
        return offset + np.concatenate([[0.0], np.cumsum(steps)])
    
    return make
