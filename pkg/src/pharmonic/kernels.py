"""Backend selection for the point-evaluation kernels.

The compiled extension is used when it imports; otherwise the numpy
fallback is used. Setting ``PHARMONIC_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if os.environ.get("PHARMONIC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # noqa: F811
        BACKEND = "cython"
    except ImportError:
        pass

eval_bipoly = _impl.eval_bipoly
eval_jet = _impl.eval_jet

__all__ = ["BACKEND", "eval_bipoly", "eval_jet"]
