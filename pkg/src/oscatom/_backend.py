"""Kernel backend selection: compiled extension if available, numpy fallback otherwise.

Set ``OSCATOM_BACKEND=python`` to force the fallback (used by the benchmark
to compare both in one process).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("OSCATOM_BACKEND", "").lower() == "python":
    kernels = _kernels_py
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore[no-redef]
    except ImportError:
        kernels = _kernels_py

BACKEND = kernels.BACKEND_NAME
