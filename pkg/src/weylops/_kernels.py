"""Kernel backend selector.

Imports the compiled Cython kernels when available, falling back to the
pure-Python twin.  Set WEYLOPS_PURE=1 to force the fallback (used by the
parity tests and the benchmark).
"""

import os

if os.environ.get("WEYLOPS_PURE"):
    from ._kernels_py import (  # noqa: F401
        KERNEL_BACKEND,
        binom_product,
        diffop_apply,
        diffop_mul,
        partial_apply,
        poly_add,
        poly_mul,
        poly_neg,
        poly_scale,
    )
else:
    try:
        from ._kernels_cy import (  # noqa: F401
            KERNEL_BACKEND,
            binom_product,
            diffop_apply,
            diffop_mul,
            partial_apply,
            poly_add,
            poly_mul,
            poly_neg,
            poly_scale,
        )
    except ImportError:
        from ._kernels_py import (  # noqa: F401
            KERNEL_BACKEND,
            binom_product,
            diffop_apply,
            diffop_mul,
            partial_apply,
            poly_add,
            poly_mul,
            poly_neg,
            poly_scale,
        )
