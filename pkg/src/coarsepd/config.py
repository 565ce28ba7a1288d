"""Runtime caps for generated spaces."""

from __future__ import annotations

import os

DEFAULT_MAX_POINTS = 4096

_ENV_VAR = "COARSE_PD_MAX_POINTS"


def max_points() -> int:
    """Cardinality cap for generated metric spaces.

    Overridable through the COARSE_PD_MAX_POINTS environment variable.
    """
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_POINTS
    value = int(raw)
    if value < 1:
        raise ValueError(f"{_ENV_VAR} must be a positive integer, got {raw!r}")
    return value
