"""Optional numba dependency.

Set ``UNNLAB_NO_NUMBA=1`` to force the pure-numpy kernels even when numba is
importable. The flag is read once, at import time.
"""
import os

_disabled = os.environ.get("UNNLAB_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _disabled:
        raise ImportError("disabled by UNNLAB_NO_NUMBA")
    from numba import njit as _njit

    USING_NUMBA = True

    def njit(*args, **kwargs):
        kwargs.setdefault("cache", True)
        return _njit(*args, **kwargs)

except ImportError:
    USING_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f
