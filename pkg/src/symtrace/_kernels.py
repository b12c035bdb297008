"""Backend selection for the enumeration kernels.

The compiled extension is preferred when it imported cleanly and the
arithmetic provably fits in int64; otherwise the pure-Python big-int
implementation runs.  Set SYMTRACE_PURE=1 to force pure Python (used by
the benchmark and the test matrix).
"""

from __future__ import annotations

import os
from array import array
from math import factorial

from . import _kernels_py

_c = None
if os.environ.get("SYMTRACE_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels_c as _c  # type: ignore[no-redef]
    except ImportError:
        _c = None

BACKEND = "c" if _c is not None else "python"

# Leave headroom below 2**63: intermediates stay under this bound.
_INT64_SAFE = 2**62


def has_compiled() -> bool:
    return _c is not None


def antisym_fits_int64(max_abs_entry: int, n: int, k: int) -> bool:
    """True when every intermediate of the contraction fits in int64.

    Each product of k entries is bounded by max_abs^k and at most
    k! * n^k of them are accumulated.
    """
    return factorial(k) * n**k * max(1, max_abs_entry) ** k < _INT64_SAFE


def antisym_raw(flat: list, n: int, k: int) -> int:
    """Dispatch the signed permutation-sum contraction (integer entries)."""
    if _c is not None and antisym_fits_int64(max(map(abs, flat), default=0), n, k):
        return _c.antisym_raw(array("q", flat), n, k)
    return _kernels_py.antisym_raw(flat, n, k)


def tally_cycle_types(n: int) -> dict:
    """Dispatch the exhaustive S_n cycle-type census."""
    if _c is not None:
        return _c.tally_cycle_types(n)
    return _kernels_py.tally_cycle_types(n)


def backends() -> dict:
    """Available kernel modules keyed by name (for the benchmark)."""
    found = {"python": _kernels_py}
    if _c is not None:
        found["c"] = _c
    return found


def antisym_raw_with(backend_name: str, flat: list, n: int, k: int) -> int:
    mod = backends()[backend_name]
    if mod is _kernels_py:
        return mod.antisym_raw(flat, n, k)
    return mod.antisym_raw(array("q", flat), n, k)
