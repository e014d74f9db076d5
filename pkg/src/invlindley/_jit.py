"""Backend selection for the hot numeric kernels.

The simulation harness has two interchangeable implementations: a compiled
one (numba) and a pure-numpy one.  The environment variable INVLINDLEY_JIT
picks between them at call time: set it to 0/false/off/no to force the
numpy path.  When numba is not importable the numpy path is used silently.
"""

from __future__ import annotations

import os

_OFF = {"0", "false", "off", "no"}


def numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def jit_enabled() -> bool:
    """True when the compiled backend should run."""
    flag = os.environ.get("INVLINDLEY_JIT", "").strip().lower()
    if flag in _OFF:
        return False
    return numba_available()
