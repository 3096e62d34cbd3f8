"""Kernel selection: compiled extension when available and safe, else pure.

The compiled module assumes coordinates fit in int64 with headroom for
128-bit products; `active_kernel` routes any larger input to the pure
module. RECTDEL_PURE=1 forces the pure kernels.
"""

import os

from . import pure

try:
    from . import _fast
except ImportError:  # extension not built
    _fast = None

FORCE_PURE = os.environ.get("RECTDEL_PURE") == "1"
HAVE_FAST = _fast is not None

# Degree-2 products of coordinates this large still fit comfortably in
# __int128; anything bigger is handed to the pure kernels.
INT64_SAFE = 1 << 40


def active_kernel(xs, ys):
    """Pick the kernel module for the given integer coordinate lists."""
    if FORCE_PURE or _fast is None:
        return pure
    for v in xs:
        if v > INT64_SAFE or v < -INT64_SAFE:
            return pure
    for v in ys:
        if v > INT64_SAFE or v < -INT64_SAFE:
            return pure
    return _fast


def kernel_name() -> str:
    if FORCE_PURE or _fast is None:
        return "pure"
    return "fast"
