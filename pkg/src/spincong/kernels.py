"""Backend selection for the hot loops.

The compiled extension ``_kernels`` is used when it imports; otherwise the
pure-Python module with identical semantics takes over.  Setting
``SPINCONG_PURE_PYTHON=1`` forces the fallback (used by the benchmark and
by the backend-equivalence tests).
"""

import os

from . import _purekernels

# largest accumulated magnitude the int64 convolution may be handed
I64_SAFE = 1 << 62

if os.environ.get("SPINCONG_PURE_PYTHON") == "1":
    _impl = _purekernels
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _purekernels

BACKEND = "compiled" if _impl is not _purekernels else "python"

mul_trunc_i64 = _impl.mul_trunc_i64
strict_sign_counts = _impl.strict_sign_counts
core_sign_counts = _impl.core_sign_counts
