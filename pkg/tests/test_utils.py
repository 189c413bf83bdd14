"""
Tests for configuration loading and hashing helpers.
"""

import numpy as np
import pytest
import yaml

from hjfilter.utils.hashing import array_digest, content_hash
from hjfilter.utils.io import get_output_paths, load_config, resolve_path


def _write(tmp_path, data):
    path = tmp_path / "config.yaml"
    path.write_text(yaml.safe_dump(data))
    return path


class TestLoadConfig:
    """Tests for benchmark config validation."""
    
    def test_valid(self, tmp_path, sample_config):
        """Test that a complete config loads."""
        config = load_config(_write(tmp_path, sample_config))
        assert config["run_id"] == "test_run"
        assert config["tables"][0]["problem"] == "identity"
    
    def test_missing_file(self, tmp_path):
        """Test a missing path."""
        with pytest.raises(FileNotFoundError):
            load_config(tmp_path / "nope.yaml")
    
    def test_missing_section(self, tmp_path, sample_config):
        """Test that required sections are enforced."""
        del sample_config["tables"]
        with pytest.raises(ValueError, match="tables"):
            load_config(_write(tmp_path, sample_config))
    
    def test_entry_without_problem(self, tmp_path, sample_config):
        """Test that each table entry names a problem."""
        sample_config["tables"] = [{"levels": [10, 20]}]
        with pytest.raises(ValueError, match="problem"):
            load_config(_write(tmp_path, sample_config))
    
    def test_empty_tables(self, tmp_path, sample_config):
        """Test that the table list must not be empty."""
        sample_config["tables"] = []
        with pytest.raises(ValueError):
            load_config(_write(tmp_path, sample_config))
    
    def test_shipped_config(self, project_root):
        """Test that the shipped benchmark config is valid."""
        config = load_config(project_root / "config" / "benchmark_tables.yaml")
        problems = {entry["problem"] for entry in config["tables"]}
        assert {"ex1a", "ex1b", "ex2", "ex3", "ex4", "ex5", "ex6", "ex7"} <= problems


class TestPaths:
    """Tests for output path layout."""
    
    def test_output_paths(self, tmp_path, sample_config):
        """Test run, tables, plots and meta directories."""
        paths = get_output_paths(sample_config, tmp_path)
        assert paths["run_dir"] == tmp_path / "runs" / "test_run"
        assert paths["tables_dir"] == paths["run_dir"] / "tables"
        assert paths["meta_dir"] == paths["run_dir"] / "meta"
    
    def test_resolve_relative(self, tmp_path):
        """Test relative paths are anchored at the base."""
        assert resolve_path("a/b", tmp_path) == (tmp_path / "a" / "b").resolve()
        assert resolve_path(tmp_path) == tmp_path


class TestHashing:
    """Tests for content fingerprints."""
    
    def test_content_hash(self):
        """Test determinism, length and str/bytes agreement."""
        assert content_hash("abc") == content_hash(b"abc")
        assert len(content_hash("abc")) == 16
        assert content_hash("abc") != content_hash("abd")
    
    def test_array_digest(self):
        """Test that dtype and shape enter the digest."""
        values = np.arange(6, dtype=float)
        assert array_digest(values) == array_digest(values.copy())
        assert array_digest(values) != array_digest(values.astype(np.float32))
        assert array_digest(values) != array_digest(values.reshape(2, 3))
