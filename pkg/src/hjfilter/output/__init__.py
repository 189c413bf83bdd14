"""
Writers for convergence tables, plot data and run metadata.
"""

from hjfilter.output.metadata import summarize_rows, write_run_metadata
from hjfilter.output.plotdata import emit_plot_data
from hjfilter.output.tables import TABLE_FORMATS, emit_table, format_csv, format_markdown

__all__ = [
    "summarize_rows",
    "write_run_metadata",
    "emit_plot_data",
    "TABLE_FORMATS",
    "emit_table",
    "format_csv",
    "format_markdown",
]
