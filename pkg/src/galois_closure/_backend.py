"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module.  Setting ``GALOIS_CLOSURE_BACKEND=python``
forces the fallback.
"""

import os

from . import _pykernels

_forced = os.environ.get("GALOIS_CLOSURE_BACKEND", "").strip().lower()

kernels = _pykernels
if _forced != "python":
    try:
        from . import _ckernels as kernels  # type: ignore[no-redef]
    except ImportError:
        if _forced == "cython":
            raise
        kernels = _pykernels

BACKEND: str = kernels.NAME


def available_backends():
    """Return every importable kernel module, fallback first."""
    mods = [_pykernels]
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        mods.append(_ckernels)
    return mods
