"""Runtime knobs, read once from the environment at import time.

``FREEVL_DISABLE_NUMBA=1``      route hot kernels through the pure-numpy path
``FREEVL_MAX_GENERATORS``       cap for :func:`free_boolean_algebra` (default 12)
``FREEVL_QUANTIFIER_MAX_ATOMS`` cap for the quantifier-form cone check (default 8)
"""

import os


def _env_flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() in {"1", "true", "yes", "on"}


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


DISABLE_NUMBA = _env_flag("FREEVL_DISABLE_NUMBA")
MAX_GENERATORS = _env_int("FREEVL_MAX_GENERATORS", 12)
QUANTIFIER_MAX_ATOMS = _env_int("FREEVL_QUANTIFIER_MAX_ATOMS", 8)

# bitmask kernels index arrays of length 2**atoms with int64 masks
KERNEL_HARD_MAX_ATOMS = 24
