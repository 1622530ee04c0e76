"""Backend selection for the hot kernels.

The compiled extension is used when it imports; set ``HOPFTWIST_PURE_PYTHON=1``
to force the pure-Python implementation.
"""

import os

if os.environ.get("HOPFTWIST_PURE_PYTHON"):
    from ._kernels_py import BACKEND, echelon, mono_div, mono_mul, poly_mul
else:
    try:
        from ._kernels import BACKEND, echelon, mono_div, mono_mul, poly_mul
    except ImportError:  # extension not built
        from ._kernels_py import BACKEND, echelon, mono_div, mono_mul, poly_mul

__all__ = ["BACKEND", "echelon", "mono_div", "mono_mul", "poly_mul"]
