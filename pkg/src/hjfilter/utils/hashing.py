"""
Deterministic hashing utilities for reproducibility checks.

Tables and fields are fingerprinted so that two runs of the same study can be
compared byte-for-byte.
"""

import hashlib
from typing import Union

import numpy as np


def content_hash(data: Union[str, bytes]) -> str:
    """
    Generate a content hash for data integrity verification.
    
    Args:
        data: String or bytes to hash
        
    Returns:
        Hex string of SHA-256 hash (first 16 chars)
    """
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()[:16]


def array_digest(values: np.ndarray) -> str:
    """
    Fingerprint a numeric array (shape, dtype and raw bytes).
    
    Args:
        values: Array to hash
        
    Returns:
        Hex string of SHA-256 hash (first 16 chars)
    """
    arr = np.ascontiguousarray(values)
    header = f"{arr.shape}:{arr.dtype.str}:".encode("utf-8")
    return content_hash(header + arr.tobytes())
