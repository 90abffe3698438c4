"""
Backend selection for the lattice-sum kernels.

The compiled ``_ckernels`` extension is used when it imports; otherwise
the numpy implementation in ``_pykernels``.  Setting the environment
variable ``TORUSHEAT_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("TORUSHEAT_PURE_PYTHON", "0") in ("", "0"):
    try:
        from . import _ckernels as _impl  # noqa: F811

        BACKEND = "cython"
    except ImportError:
        pass

spectral_sum = _impl.spectral_sum
periodized_sum = _impl.periodized_sum


def available_backends():
    """Map backend name to kernel module for every importable backend."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
