"""
Metadata sidecar for benchmark runs.

Records:
- Run specification (problem, schemes, levels, overrides)
- Per-scheme summary (final error, last order, divergence)
- Content hashes of every emitted table

No timestamps are written, so identical runs produce identical files.
"""

import json
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from hjfilter import __version__
from hjfilter.analysis.convergence import ConvergenceRow
from hjfilter.utils.hashing import content_hash
from hjfilter.utils.io import ensure_dir


def _json_float(value: Optional[float]) -> Optional[float]:
    if value is None or not math.isfinite(value):
        return None
    return value


def summarize_rows(rows_by_scheme: Dict[str, List[ConvergenceRow]]) -> Dict[str, Dict[str, Any]]:
    """Finest-level error, last order and divergence count per scheme."""
    summary = {}
    for scheme, rows in rows_by_scheme.items():
        finest = rows[-1]
        summary[scheme] = {
            "levels": [row.M for row in rows],
            "finest_error": _json_float(finest.error),
            "last_order": _json_float(finest.order),
            "diverged_levels": [row.M for row in rows if row.diverged],
        }
    return summary


def write_run_metadata(
    run_spec: Dict[str, Any],
    summary: Dict[str, Any],
    tables: Dict[str, bytes],
    output_path: Union[str, Path],
) -> Path:
    """
    Write the run metadata JSON.
    
    Args:
        run_spec: Serialisable description of what was run
        summary: Per-table, per-scheme summary
        tables: Emitted table bytes keyed by file name
        output_path: JSON file to write
        
    Returns:
        Path to generated JSON file
    """
    metadata: Dict[str, Any] = {
        "version": __version__,
        "run": run_spec,
        "summary": summary,
        "tables": {name: content_hash(data) for name, data in sorted(tables.items())},
    }
    output_path = Path(output_path)
    ensure_dir(output_path.parent)
    with open(output_path, "w") as f:
        json.dump(metadata, f, indent=2, sort_keys=True)
        f.write("\n")
    return output_path
