# blaschke_pick/problem/loader.py
"""Reader for the JSON problem schema.

A problem file looks like::

    {"name": "optional label",
     "nodes":   [{"re": 1.0, "im": 0.0}, "angle:1.5707963267948966", ...],
     "targets": [...]}

Points are either ``{"re", "im"}`` objects or ``"angle:θ"`` strings with θ in
radians; both encodings may be mixed.
"""
from __future__ import annotations

import cmath
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, ValidationError as SchemaError, field_validator

from ..errors import InvalidArgument, ValidationError, Violation
from .models import BoundaryData

logger = logging.getLogger(__name__)

_ANGLE_PREFIX = "angle:"


def parse_point(raw: Any) -> complex:
    """Decode one point of the problem schema."""
    if isinstance(raw, str):
        if not raw.startswith(_ANGLE_PREFIX):
            raise ValueError(f"point strings must look like 'angle:<radians>', got {raw!r}")
        return cmath.exp(1j * float(raw[len(_ANGLE_PREFIX) :]))
    if isinstance(raw, dict):
        if set(raw) != {"re", "im"}:
            raise ValueError(f"point objects need exactly 're' and 'im', got {sorted(raw)}")
        return complex(float(raw["re"]), float(raw["im"]))
    raise ValueError(f"unsupported point encoding: {raw!r}")


class ProblemFile(BaseModel):
    """Schema of a problem file; points are decoded to complex numbers."""

    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = None
    nodes: List[complex]
    targets: List[complex]

    @field_validator("nodes", "targets", mode="before")
    @classmethod
    def _decode_points(cls, value: Any) -> List[complex]:
        if not isinstance(value, list):
            raise ValueError("expected a list of points")
        return [parse_point(item) for item in value]

    def to_boundary_data(self) -> BoundaryData:
        return BoundaryData(tuple(self.nodes), tuple(self.targets))


def load_problem(source: Union[str, Path, Dict[str, Any]]) -> BoundaryData:
    """Load and validate a problem from a JSON file path or an already-parsed dict.

    Raises:
        FileNotFoundError: If the path does not exist.
        InvalidArgument: If the path does not end in .json.
        ValidationError: If the schema or any problem invariant is violated.
    """
    if isinstance(source, (str, Path)):
        path = Path(source)
        if not path.exists():
            raise FileNotFoundError(f"problem file not found: {path}")
        if path.suffix.lower() != ".json":
            raise InvalidArgument(f"problem file must be JSON, got: {path.suffix}")
        with open(path, "r") as f:
            try:
                source = json.load(f)
            except json.JSONDecodeError as e:
                raise ValidationError(
                    [Violation(kind="schema", detail=f"invalid JSON: {e.msg} at line {e.lineno}")]
                ) from e
        logger.debug("loaded problem file %s", path)

    try:
        problem = ProblemFile.model_validate(source)
    except SchemaError as e:
        raise ValidationError(
            [
                Violation(kind="schema", detail=f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}")
                for err in e.errors()
            ]
        ) from e
    return problem.to_boundary_data()
