"""Size bounds for the exhaustive searches.

All brute-force machinery (canonical forms, minor search, plane-dual sweeps,
enumeration) refuses inputs above a configured edge count so that runaway
searches fail fast instead of hanging.  Each bound can be overridden per call
via a ``max_edges=`` argument, or globally through the ``RIBBONFORGE_MAX_EDGES``
environment variable.
"""

from __future__ import annotations

import os

CANONICAL_MAX_EDGES = 8
MINOR_SEARCH_MAX_EDGES = 8
PLANE_DUAL_MAX_EDGES = 12
ENUMERATION_MAX_EDGES = 5


def env_override() -> int | None:
    """The global bound override, if RIBBONFORGE_MAX_EDGES is set and sane."""
    raw = os.environ.get("RIBBONFORGE_MAX_EDGES")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return value if value > 0 else None


def effective_bound(default: int, max_edges: int | None = None) -> int:
    """Resolve a bound: explicit argument wins, then env var, then default."""
    if max_edges is not None:
        return max_edges
    override = env_override()
    if override is not None:
        return override
    return default
