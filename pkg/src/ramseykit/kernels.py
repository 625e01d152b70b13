"""Kernel selection: compiled extension when importable, else pure Python.

Set ``RAMSEYKIT_PURE=1`` to force the pure-Python kernels.
"""

import os

from . import _pykernels

try:
    if os.environ.get("RAMSEYKIT_PURE"):
        raise ImportError("pure kernels requested")
    from . import _ckernels as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

canonical_form = _impl.canonical_form
