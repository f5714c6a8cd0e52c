"""Size caps for exhaustive operations.

``GALOIS_CAP`` in the environment overrides the table and direct-check caps
(both measured as the exponent ``n`` of a ``2**n`` sweep).
"""

import os

MAX_UNIVERSE = 64
# hard ceiling for any 2**n sweep regardless of overrides
SWEEP_LIMIT = 40
TABLE_CAP = 16
FAMILY_CAP = 20
DIRECT_CAP = 16
EXHAUSTIVE_ENUM_CAP = 4
CONNECTION_BUDGET = 10**7


def _env_cap(default: int) -> int:
    raw = os.environ.get("GALOIS_CAP")
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"GALOIS_CAP must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError("GALOIS_CAP must be nonnegative")
    return min(value, SWEEP_LIMIT)


def table_cap() -> int:
    return _env_cap(TABLE_CAP)


def direct_cap() -> int:
    return _env_cap(DIRECT_CAP)
