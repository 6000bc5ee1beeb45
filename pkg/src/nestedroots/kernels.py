"""Dispatch between the compiled arithmetic kernels and the pure fallback.

Set ``NESTEDROOTS_PURE=1`` to force the pure-Python path.
"""

import os

BACKEND = "python"

if os.environ.get("NESTEDROOTS_PURE", "") not in ("", "0"):
    from nestedroots._kernels_py import cross3, det3, dot, float_signs, matvec, mulmod
else:
    try:
        from nestedroots._kernels import cross3, det3, dot, float_signs, matvec, mulmod

        BACKEND = "compiled"
    except ImportError:
        from nestedroots._kernels_py import cross3, det3, dot, float_signs, matvec, mulmod

__all__ = ["BACKEND", "cross3", "det3", "dot", "float_signs", "matvec", "mulmod"]
