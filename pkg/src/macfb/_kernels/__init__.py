"""Kernel backend selection: compiled extension if available, numpy otherwise.

Set ``MACFB_KERNELS=numpy`` to force the fallback (used by the benchmark and
by tests that compare the two backends).
"""

from __future__ import annotations

import os

from . import _fallback
from ._fallback import KIND_ERASURE, KIND_NOISY, STAT_COLUMNS

try:
    from . import _core
except ImportError:  # extension not built; pure-Python install
    _core = None

_FORCED = os.environ.get("MACFB_KERNELS", "").strip().lower()
if _FORCED == "numpy" or _core is None:
    _active = _fallback
    BACKEND = "numpy"
else:
    _active = _core
    BACKEND = "compiled"

HAVE_COMPILED = _core is not None

input_stats = _active.input_stats
cutset_stats = _active.cutset_stats


def backends() -> dict[str, object]:
    """All importable backends, keyed by name (for tests and benchmarks)."""
    out: dict[str, object] = {"numpy": _fallback}
    if _core is not None:
        out["compiled"] = _core
    return out


__all__ = [
    "BACKEND",
    "HAVE_COMPILED",
    "KIND_NOISY",
    "KIND_ERASURE",
    "STAT_COLUMNS",
    "input_stats",
    "cutset_stats",
    "backends",
]
