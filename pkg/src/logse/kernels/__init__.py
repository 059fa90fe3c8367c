"""Hot-kernel backend selection.

Prefers the compiled extension (``logse.kernels._speedups``) when it has been
built; otherwise falls back to the numpy implementations. Set
``LOGSE_PURE_PYTHON=1`` to force the fallback (the benchmark suite uses this
to compare both).
"""

import os

from . import pure

_impl = pure
if os.environ.get("LOGSE_PURE_PYTHON") != "1":
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        pass

DEGENERATE_ETA = pure.DEGENERATE_ETA

log_phase_apply = _impl.log_phase_apply
f_eps_arr = _impl.f_eps_arr
F_eps_arr = _impl.F_eps_arr
g_eps_arr = _impl.g_eps_arr


def backend() -> str:
    """Name of the active backend: 'compiled' or 'python'."""
    return _impl.BACKEND
