"""Kernel backend selection.

The compiled ``_ckernels`` module is used when it was built; otherwise, or
when ``FLLMETRIC_PURE_PYTHON`` is set, the pure-Python ``_pykernels`` is used.
Both expose the same functions and return identical results.
"""
import os

from . import _pykernels

if os.environ.get("FLLMETRIC_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "python" if _impl is _pykernels else "compiled"

MODE_FORMULA = _pykernels.MODE_FORMULA
MODE_ENUMERATION = _pykernels.MODE_ENUMERATION
MODE_BOTH = _pykernels.MODE_BOTH

l1_size = _impl.l1_size
lcs_length = _impl.lcs_length
ball_size = _impl.ball_size
sweep_range = _impl.sweep_range
