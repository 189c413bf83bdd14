"""
Serialisation of convergence tables.

CSV keeps full float precision (repr), writes non-finite errors as "NaN" and
leaves missing orders empty. Markdown mirrors the benchmark table layout with
three significant digits ("7.51E-03") and two-decimal orders.
"""

import io
import math
from typing import Dict, List, Optional, Union

import pandas as pd

from hjfilter.analysis.convergence import ConvergenceRow, rows_to_frame

TABLE_FORMATS = ("csv", "md")

RowsByScheme = Dict[str, List[ConvergenceRow]]


def _missing(value) -> bool:
    if value is None:
        return True
    try:
        return math.isnan(value)
    except TypeError:
        return False


def _csv_cell(column: str, value) -> str:
    if column.startswith("error_"):
        return "NaN" if _missing(value) or not math.isfinite(value) else repr(float(value))
    if column.startswith("order_"):
        return "" if _missing(value) else repr(float(value))
    return "" if _missing(value) else str(int(value))


def _md_cell(column: str, value) -> str:
    if column.startswith("error_"):
        return "NaN" if _missing(value) or not math.isfinite(value) else f"{value:.2E}"
    if column.startswith("order_"):
        return "-" if _missing(value) else f"{value:.2f}"
    return "" if _missing(value) else str(int(value))


def _md_header(column: str) -> str:
    if column.startswith("error_"):
        return f"{column[len('error_'):]} error"
    if column.startswith("order_"):
        return "order"
    if column.startswith("N_"):
        return f"{column[len('N_'):]} N"
    return column


def _as_frame(table: Union[RowsByScheme, pd.DataFrame]) -> pd.DataFrame:
    return table if isinstance(table, pd.DataFrame) else rows_to_frame(table)


def format_csv(frame: pd.DataFrame) -> str:
    """CSV text of a convergence frame."""
    cells = pd.DataFrame(
        {column: [_csv_cell(column, v) for v in frame[column]] for column in frame.columns}
    )
    buffer = io.StringIO()
    cells.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def format_markdown(frame: pd.DataFrame, title: Optional[str] = None) -> str:
    """Markdown table of a convergence frame."""
    lines = []
    if title:
        lines.extend([f"### {title}", ""])
    lines.append("| " + " | ".join(_md_header(c) for c in frame.columns) + " |")
    lines.append("|" + "|".join("---:" for _ in frame.columns) + "|")
    for _, row in frame.iterrows():
        lines.append("| " + " | ".join(_md_cell(c, row[c]) for c in frame.columns) + " |")
    return "\n".join(lines) + "\n"


def emit_table(
    table: Union[RowsByScheme, pd.DataFrame],
    fmt: str = "csv",
    title: Optional[str] = None,
) -> bytes:
    """
    Serialise per-scheme convergence rows.
    
    Args:
        table: Rows keyed by scheme name, or a frame from rows_to_frame
        fmt: "csv" or "md"
        title: Heading for markdown output
        
    Returns:
        UTF-8 encoded table
    """
    if fmt not in TABLE_FORMATS:
        raise ValueError(f"Unknown table format '{fmt}'. Available: {list(TABLE_FORMATS)}")
    frame = _as_frame(table)
    text = format_csv(frame) if fmt == "csv" else format_markdown(frame, title)
    return text.encode("utf-8")
