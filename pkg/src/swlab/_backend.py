"""Select the BFS kernel implementation at import time.

The compiled Cython module is used when it was built; otherwise the
pure-Python fallback is loaded. Setting ``SWLAB_PURE_PYTHON=1`` forces the
fallback.
"""

import os

from . import _fallback

if os.environ.get("SWLAB_PURE_PYTHON", "") not in ("", "0"):
    kernels = _fallback
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels
        BACKEND = "cython"
    except ImportError:  # extension not built
        kernels = _fallback
        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
