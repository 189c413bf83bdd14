"""
Utility modules for hjfilter.
"""

from hjfilter.utils.console import console, report, set_quiet
from hjfilter.utils.hashing import array_digest, content_hash
from hjfilter.utils.io import ensure_dir, load_config, resolve_path

__all__ = [
    "console",
    "report",
    "set_quiet",
    "array_digest",
    "content_hash",
    "ensure_dir",
    "load_config",
    "resolve_path",
]
