"""Select compiled kernels when available, pure-Python ones otherwise.

Set ``SVOA_PURE_PYTHON=1`` to force the fallback (used by the benchmark and
by the test that checks both backends agree).
"""

from __future__ import annotations

import os

from . import _cyclo as cyclo_py
from . import _kernels as kernels_py

FORCE_PURE = os.environ.get("SVOA_PURE_PYTHON", "") not in ("", "0")

cyclo = cyclo_py
kernels = kernels_py
NAME = "python"

if not FORCE_PURE:
    try:
        from . import _cyclo_ext, _kernels_ext
    except ImportError:  # extension not built
        pass
    else:
        cyclo = _cyclo_ext
        kernels = _kernels_ext
        NAME = "compiled"
