"""Kernel backend selection.

The compiled Cython kernels are used when importable; setting the
environment variable WEAKCOMM_PURE (to any nonempty value) forces the
pure-Python reference kernels. Both expose the same functions with the
same exact semantics.
"""

from __future__ import annotations

import os

if os.environ.get("WEAKCOMM_PURE"):
    from . import _kernel_py as kernel

    BACKEND = "pure"
else:
    try:
        from . import _kernel_cy as kernel  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernel_py as kernel

        BACKEND = "pure"
