"""Kernel selection.

The compiled extension is used when it imports; otherwise the pure-Python
kernels are used.  Setting ``BECURV_BACKEND=python`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"
jacobi_eigh = _pykernels.jacobi_eigh
canon_order = _pykernels.canon_order
refine_colors = _pykernels.refine_colors

if os.environ.get("BECURV_BACKEND", "").lower() != "python":
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        jacobi_eigh = _kernels.jacobi_eigh
        canon_order = _kernels.canon_order
        refine_colors = _kernels.refine_colors
