"""Enumeration guards.

Exhaustive sweeps grow like Catalan numbers, so every enumerating entry
point checks a small size limit first. The ``TREEDEGREE_GUARD`` environment
variable (a single nonnegative integer) replaces all default limits at
call time; it is a safety valve for deliberate large runs, not a tuning
knob.
"""

from __future__ import annotations

import os

GUARD_ENV = "TREEDEGREE_GUARD"

# Default ceilings: plane trees by edge count, k-ary trees by k*n,
# outdegree-type vectors by edge count.
PLANE_EDGE_LIMIT = 14
KARY_EDGE_LIMIT = 24
SEQUENCE_LIMIT = 30


def guard_limit(default: int) -> int:
    raw = os.environ.get(GUARD_ENV)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{GUARD_ENV} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{GUARD_ENV} must be nonnegative, got {value}")
    return value


def check_guard(label: str, cost: int, default: int) -> None:
    limit = guard_limit(default)
    if cost > limit:
        raise ValueError(
            f"{label} exceeds the enumeration guard ({cost} > {limit}); "
            f"set {GUARD_ENV} to raise the limit"
        )
