"""Kernel backend selection.

Prefers the compiled extension when importable, falling back to the NumPy
implementation.  ``MONO_BACKEND=python`` or ``MONO_BACKEND=compiled`` forces a
choice (the latter raises if the extension is missing); both backends produce
bit-identical results, so the switch only affects speed.
"""

from __future__ import annotations

import os

from . import _kernels_py

_FORCED = os.environ.get("MONO_BACKEND", "").strip().lower()
if _FORCED not in ("", "compiled", "python"):
    raise ImportError(f"MONO_BACKEND must be 'compiled' or 'python', got {_FORCED!r}")

if _FORCED == "python":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        if _FORCED == "compiled":
            raise
        _impl = _kernels_py

BACKEND_NAME: str = _impl.BACKEND_NAME
HAVE_COMPILED: bool = BACKEND_NAME == "compiled"

NEG = _kernels_py.NEG
POS = _kernels_py.POS
ABS = _kernels_py.ABS
NEG_POW = _kernels_py.NEG_POW
POS_POW = _kernels_py.POS_POW
ABS_POW = _kernels_py.ABS_POW

transform_reduce = _impl.transform_reduce
sign_split_sums = _impl.sign_split_sums
