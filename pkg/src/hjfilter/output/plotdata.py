"""
Plain-text plot data for external plotting tools.
"""

from pathlib import Path
from typing import Dict, Optional, Union

import numpy as np

from hjfilter.mesh.field import Field
from hjfilter.mesh.grid import Grid1D
from hjfilter.utils.io import ensure_dir


def emit_plot_data(
    field: Field,
    exact: Optional[np.ndarray],
    path: Union[str, Path],
    meta: Optional[Dict[str, object]] = None,
) -> Path:
    """
    Write nodal values as whitespace-separated columns.
    
    1D fields give columns ``x u exact`` (exact omitted when None); 2D fields
    give ``x y u`` with one line per node. The header lines start with '#'.
    
    Args:
        field: Numerical solution
        exact: Exact nodal values (1D only)
        path: Output file
        meta: Key/value pairs written to the header
        
    Returns:
        Path to the written file
        
    Raises:
        OSError: If the file cannot be written
    """
    path = Path(path)
    grid = field.grid
    if isinstance(grid, Grid1D):
        columns = [grid.nodes, field.values]
        names = ["x", "u"]
        if exact is not None:
            columns.append(np.asarray(exact, dtype=float))
            names.append("exact")
        data = np.column_stack(columns)
    else:
        X, Y = grid.mesh()
        data = np.column_stack([X.ravel(), Y.ravel(), field.values.ravel()])
        names = ["x", "y", "u"]
    
    header_lines = [f"{key}={value}" for key, value in (meta or {}).items()]
    header_lines.append(f"t={field.t:.17g}")
    header_lines.append(" ".join(names))
    try:
        ensure_dir(path.parent)
        np.savetxt(path, data, fmt="%.17g", header="\n".join(header_lines), comments="# ")
    except OSError as exc:
        raise OSError(f"Could not write plot data to {path}: {exc}") from exc
    return path
