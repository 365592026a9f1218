"""
Report serialization for blaschke-pick
"""

from .formatter import (
    TRACE_HEADER,
    format_error,
    format_json,
    format_trace_csv,
    summary_table,
    to_jsonable,
)

__all__ = [
    "TRACE_HEADER",
    "format_error",
    "format_json",
    "format_trace_csv",
    "summary_table",
    "to_jsonable",
]
