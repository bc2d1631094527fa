"""Hot loops, compiled when possible.

``BACKEND`` is ``"cython"`` when the extension module imported and
``"python"`` otherwise; setting ``KNOTFORGE_PURE_PYTHON=1`` forces the NumPy
fallback.  Both backends expose the same functions and return identical
results.
"""

import os

from . import _pykernels as python_backend

BACKEND = "python"
compiled_backend = None

if not os.environ.get("KNOTFORGE_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_backend

        BACKEND = "cython"
    except ImportError:
        compiled_backend = None

_impl = compiled_backend if BACKEND == "cython" else python_backend

echelon_mod_p = _impl.echelon_mod_p
statesum_mod_p = _impl.statesum_mod_p
statesum_bounds = _impl.statesum_bounds

__all__ = [
    "BACKEND",
    "compiled_backend",
    "python_backend",
    "echelon_mod_p",
    "statesum_mod_p",
    "statesum_bounds",
]
