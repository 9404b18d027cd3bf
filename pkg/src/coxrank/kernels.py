"""Backend selection for the word kernels.

The compiled extension is preferred when importable; set
``COXRANK_PURE_PYTHON=1`` to force the pure-Python fallback.  Both
backends implement the same contracts and are cross-checked in the test
suite, so the choice only affects speed (see benchmarks/bench_kernels.py).
"""

from __future__ import annotations

import os

if os.environ.get("COXRANK_PURE_PYTHON"):
    from . import _kernel_py as _backend

    BACKEND = "python"
else:
    try:
        from . import _kernel as _backend  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernel_py as _backend

        BACKEND = "python"

is_reduced = _backend.is_reduced
reduce_word = _backend.reduce_word
normal_form = _backend.normal_form

__all__ = ["BACKEND", "is_reduced", "reduce_word", "normal_form"]
