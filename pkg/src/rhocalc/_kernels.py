"""Select the compiled kernels when available, else the pure-Python ones.

Set ``RHOCALC_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

if os.environ.get("RHOCALC_PURE_PYTHON"):
    impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as impl
    except ImportError:
        impl = _pykernels
        BACKEND = "python"
    else:
        BACKEND = "cython"

A_CODE = _pykernels.A_CODE
reduce_pairs = impl.reduce_pairs
join_reduced = impl.join_reduced
invert_pairs = impl.invert_pairs
reduce_ab = impl.reduce_ab
d_action_ab = impl.d_action_ab
shift_ab = impl.shift_ab
scan_ab = impl.scan_ab
expand_ab = impl.expand_ab
