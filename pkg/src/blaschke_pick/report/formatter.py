# blaschke_pick/report/formatter.py
"""Deterministic serialization of reports for stdout and stderr."""
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence
import json
import math

import numpy as np
from rich.table import Table

TRACE_HEADER = ("theta", "re_f", "im_f", "abs_f", "arg_f")


def to_jsonable(obj: Any) -> Any:
    """Reduce reports, numpy values and complex numbers to plain JSON types.

    Complex numbers become ``{"re": ..., "im": ...}``; objects exposing
    ``to_dict`` are serialized through it; non-finite floats become None
    and -0.0 becomes 0.0.
    """
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    if isinstance(obj, Mapping):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": to_jsonable(obj.real), "im": to_jsonable(obj.imag)}
    if isinstance(obj, (float, np.floating)):
        # adding 0.0 turns -0.0 into 0.0 so both signs print alike
        value = float(obj) + 0.0
        return value if math.isfinite(value) else None
    return obj


def format_json(payload: Any, indent: Optional[int] = 2) -> str:
    """
    Serialize a report with sorted keys and round-trip float precision.

    Args:
        payload: Report object, dataclass with ``to_dict`` or plain mapping

    Returns:
        JSON text; identical inputs always give identical bytes
    """
    return json.dumps(to_jsonable(payload), indent=indent, sort_keys=True, ensure_ascii=False)


def format_error(error: Exception) -> str:
    """JSON payload for an error written to stderr."""
    if hasattr(error, "to_dict"):
        payload = error.to_dict()
    else:
        payload = {"error": type(error).__name__, "message": str(error)}
    return format_json(payload)


def format_trace_csv(rows: Iterable[Sequence[float]], header: Sequence[str] = TRACE_HEADER) -> str:
    """CSV text with shortest round-trip decimals."""
    lines: List[str] = [",".join(header)]
    for row in rows:
        lines.append(",".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def summary_table(report: Dict[str, Any], title: str = "blaschke-pick") -> Table:
    """Human-readable overview of a report for the terminal."""
    table = Table(title=title, show_header=True, header_style="bold")
    table.add_column("field")
    table.add_column("value", overflow="fold")
    for key in sorted(report):
        value = report[key]
        if isinstance(value, (dict, list)):
            text = f"{len(value)} entries" if len(value) > 4 else format_json(value, indent=0).replace("\n", " ")
        else:
            text = str(value)
        table.add_row(key, text)
    return table
