"""Optional numba acceleration.

``njit`` compiles with numba unless numba is missing or ``FREEVL_DISABLE_NUMBA``
is set, in which case the decorated function stays plain Python.
"""

from . import config

try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    _numba = None

HAVE_NUMBA = _numba is not None
USE_NUMBA = HAVE_NUMBA and not config.DISABLE_NUMBA


def njit(*args, **kwargs):
    def decorator(func):
        if USE_NUMBA:
            return _numba.njit(*args, **kwargs)(func)
        return func

    return decorator
