# blaschke_pick/settings.py
"""Numerical tolerances and environment-driven configuration."""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from typing import Any, Callable, Optional

from dotenv import find_dotenv, load_dotenv

from .errors import InvalidArgument

logger = logging.getLogger(__name__)

# Library-wide defaults. Functions take these as keyword defaults so that the
# library never reads the environment on its own.
PIVOT_TOL = 1e-12
RANK_TOL = 1e-9
PSD_TOL = 1e-9
DELTA_ZERO_TOL = 1e-8
UNIMODULAR_TOL = 1e-10
NODE_SEPARATION = 1e-9
POLE_EXCLUSION = 1e-10
ROOT_MAX_ITER = 500
CLASSIFY_MAX_ORDER = 14
TRACE_SAMPLES = 1024
MIN_SAMPLES = 16

_ENV_PREFIX = "BLASCHKE_PICK_"


def _read(name: str, cast: Callable[[str], Any], default: Any) -> Any:
    raw = os.getenv(_ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return cast(raw)
    except ValueError as e:
        raise InvalidArgument(f"{_ENV_PREFIX}{name} is not a valid value: {raw!r}") from e


@dataclass(frozen=True)
class Settings:
    """Tolerances and defaults used by the pipeline and the CLI."""

    delta_tol: float = DELTA_ZERO_TOL
    rank_tol: float = RANK_TOL
    pivot_tol: float = PIVOT_TOL
    samples: int = TRACE_SAMPLES
    log_level: str = "WARNING"

    def __post_init__(self):
        """Validate Settings fields."""
        for name in ("delta_tol", "rank_tol", "pivot_tol"):
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                raise InvalidArgument(f"{name} must lie in (0, 1), got {value}")
        if self.samples < MIN_SAMPLES:
            raise InvalidArgument(f"samples must be at least {MIN_SAMPLES}, got {self.samples}")

    @classmethod
    def from_env(cls, dotenv: bool = True) -> "Settings":
        """Build settings from ``BLASCHKE_PICK_*`` variables and ``LOGLEVEL``."""
        if dotenv:
            load_dotenv(find_dotenv(usecwd=True))
        settings = cls(
            delta_tol=_read("DELTA_TOL", float, DELTA_ZERO_TOL),
            rank_tol=_read("RANK_TOL", float, RANK_TOL),
            pivot_tol=_read("PIVOT_TOL", float, PIVOT_TOL),
            samples=_read("SAMPLES", int, TRACE_SAMPLES),
            log_level=os.getenv("LOGLEVEL", "WARNING").upper(),
        )
        logger.debug("settings loaded: %s", settings)
        return settings

    def override(self, **changes: Optional[Any]) -> "Settings":
        """Return a copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})
