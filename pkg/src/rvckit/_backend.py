"""Kernel backend selection.

RVCKIT_BACKEND picks the implementation of the hot kernels:

  auto   (default) use the numba backend if it imports, else pure numpy
  numba  require the compiled backend, fail loudly if unavailable
  numpy  force the pure-numpy fallback
"""

from __future__ import annotations

import os

_choice = os.environ.get("RVCKIT_BACKEND", "auto").strip().lower()

if _choice not in ("auto", "numba", "numpy"):
    raise ImportError(
        f"RVCKIT_BACKEND must be one of auto/numba/numpy, got {_choice!r}"
    )

if _choice == "numpy":
    from . import _kernels_numpy as kernels
elif _choice == "numba":
    from . import _kernels_numba as kernels
else:
    try:
        from . import _kernels_numba as kernels
    except ImportError:
        from . import _kernels_numpy as kernels

backend_name = kernels.BACKEND_NAME
