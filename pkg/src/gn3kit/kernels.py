"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
twin.  Set ``GN3KIT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("GN3KIT_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
occurrence_indices = _impl.occurrence_indices
reduce_involutions = _impl.reduce_involutions
gn3_successors = _impl.gn3_successors
gn3_bfs = _impl.gn3_bfs


def backends():
    """All importable kernel modules, pure Python first."""
    mods = [_kernels_py]
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        mods.append(_ckernels)
    return mods
