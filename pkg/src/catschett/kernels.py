"""Statistic-table access: compiled fast path when available, pure fallback otherwise."""

import os
from functools import lru_cache

from catschett import _kernels_py

_fast = None
_BACKEND = "pure"
if os.environ.get("CATSCHETT_PURE", "") != "1":
    try:
        from catschett import _speedups

        _fast = _speedups.stat_table_fast
        _BACKEND = "compiled"
    except ImportError:
        pass

TABLE_KINDS = tuple(sorted(_kernels_py._KINDS))


def backend_name() -> str:
    """Name of the active enumeration backend."""
    return _BACKEND


@lru_cache(maxsize=None)
def stat_table(kind: str, n: int) -> dict:
    """Joint statistic distribution for one object family at size n; treat the result as read-only."""
    if _fast is not None:
        table = _fast(kind, n)
        if table is not None:
            return table
    return _kernels_py.stat_table_pure(kind, n)
