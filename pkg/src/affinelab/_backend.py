"""Kernel backend selection.

Prefers the compiled core (``affinelab._kernels_cy``, built at install
time) and falls back to the interpreted single-source module.  Both
produce bit-identical output; only throughput differs.  Set
``AFFINELAB_PURE_PYTHON=1`` to force the fallback.
"""

import os

_force_pure = os.environ.get("AFFINELAB_PURE_PYTHON", "") == "1"

if _force_pure:
    from . import _kernels as kernels
else:
    try:
        from . import _kernels_cy as kernels  # type: ignore[no-redef]
        if not getattr(kernels, "IS_COMPILED", False):
            raise ImportError("_kernels_cy present but not compiled")
    except ImportError:
        from . import _kernels as kernels  # type: ignore[no-redef]

BACKEND_NAME = "compiled" if kernels.IS_COMPILED else "pure-python"

__all__ = ["kernels", "BACKEND_NAME"]
