"""Backend selection for the contraction kernels.

The compiled ``_ckernel`` extension is used when it imports; otherwise the
pure-Python ``_pykernel``. Set ``HOPFPI_KERNEL=python`` to force the
fallback (the benchmark and the backend-equivalence tests do this).
"""
import os

from . import _pykernel

if os.environ.get("HOPFPI_KERNEL", "").lower() == "python":
    _impl = _pykernel
    BACKEND = "python"
else:
    try:
        from . import _ckernel as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernel
        BACKEND = "python"

apply_linear = _impl.apply_linear
apply_bilinear = _impl.apply_bilinear
apply_split = _impl.apply_split
apply_functional = _impl.apply_functional
insert_vector = _impl.insert_vector
permute = _impl.permute
combine = _impl.combine
matmul = _impl.matmul
