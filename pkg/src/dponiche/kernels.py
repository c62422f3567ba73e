"""Backend selection for the relation kernel.

The compiled extension is preferred when it imported cleanly; setting the
environment variable DPONICHE_NO_EXT forces the pure-Python kernel (useful
for benchmarking and debugging).  Scaled coordinates outside the int64
range are routed to the pure kernel per call, so results never depend on
which backend happens to be installed.
"""

import os

from dponiche import _kernel_py

_ext = None
if not os.environ.get("DPONICHE_NO_EXT"):
    try:
        from dponiche import _kernel as _ext
    except ImportError:
        _ext = None

BACKEND = "compiled" if _ext is not None else "python"

_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1


def _fits_int64(values: list[int]) -> bool:
    return all(_INT64_MIN <= v <= _INT64_MAX for v in values)


def relation_rows(x1: list[int], x2: list[int]) -> tuple[list[int], list[int]]:
    """Competition and common-enemy bit-rows for scaled integer coordinates."""
    if _ext is not None and _fits_int64(x1) and _fits_int64(x2):
        return _ext.relation_rows(x1, x2)
    return _kernel_py.relation_rows(x1, x2)
