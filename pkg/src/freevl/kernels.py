"""Bitmask kernels for the quantifier form of cone membership.

A formal sum arrives as parallel arrays ``masks`` (one atom bitmask per term)
and integer ``coeffs`` (exact rationals scaled by a common positive
denominator, which leaves every sign unchanged).  For each nonzero element
``b`` the *subset sum* is ``sum(coeffs[k] for k if b <= masks[k])``.

Two interchangeable backends exist:

* ``"numba"``: literal quantifier enumeration over submasks, compiled with
  ``@njit`` (interpreted when numba is disabled).
* ``"numpy"``: vectorised subset sums plus sum-over-subsets transforms, no
  enumeration of submask pairs at all.

The tests run both against each other; the benchmark compares their speed.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from . import config
from ._accel import USE_NUMBA, njit

_INT64_HEADROOM = 1 << 62


def scale_coefficients(coeffs: Sequence[Fraction]) -> np.ndarray:
    """Exact integer images of ``coeffs`` under one positive scaling.

    Returns ``int64`` when no subset sum can overflow, otherwise an ``object``
    array of Python ints (numpy backend only).
    """
    coeffs = [Fraction(c) for c in coeffs]
    denom = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    ints = [int(c * denom) for c in coeffs]
    if sum(abs(i) for i in ints) < _INT64_HEADROOM:
        return np.array(ints, dtype=np.int64)
    return np.array(ints, dtype=object)


@njit(cache=True)
def subset_sums_loop(n_atoms, masks, coeffs):
    size = 1 << n_atoms
    s = np.zeros(size, dtype=np.int64)
    for b in range(1, size):
        acc = 0
        for k in range(masks.shape[0]):
            if b & ~masks[k] == 0:
                acc += coeffs[k]
        s[b] = acc
    return s


@njit(cache=True)
def quantifier_simplified_loop(n_atoms, masks, coeffs):
    # for all a > O, exists b in (O, a] with subset sum >= 0
    s = subset_sums_loop(n_atoms, masks, coeffs)
    full = (1 << n_atoms) - 1
    for a in range(1, full + 1):
        found = False
        b = a
        while b:
            if s[b] >= 0:
                found = True
                break
            b = (b - 1) & a
        if not found:
            return False
    return True


@njit(cache=True)
def quantifier_original_loop(n_atoms, masks, coeffs):
    # for all a > O, exists b in (O, a], for all c in (O, b]: subset sum at c >= 0
    s = subset_sums_loop(n_atoms, masks, coeffs)
    full = (1 << n_atoms) - 1
    for a in range(1, full + 1):
        found = False
        b = a
        while b:
            every = True
            c = b
            while c:
                if s[c] < 0:
                    every = False
                    break
                c = (c - 1) & b
            if every:
                found = True
                break
            b = (b - 1) & a
        if not found:
            return False
    return True


def subset_sums_numpy(n_atoms: int, masks: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    universe = np.arange(1 << n_atoms, dtype=np.int64)
    s = np.zeros(universe.shape[0], dtype=coeffs.dtype)
    if coeffs.dtype == object:
        s[:] = 0
    for m, c in zip(masks.tolist(), coeffs.tolist()):
        s[(universe & ~np.int64(m)) == 0] += c
    s[0] = 0
    return s


def _superset_or(flags: np.ndarray, n_atoms: int) -> np.ndarray:
    """``out[a] = any(flags[b] for b <= a)``."""
    out = flags.copy()
    universe = np.arange(flags.shape[0], dtype=np.int64)
    for i in range(n_atoms):
        bit = np.int64(1 << i)
        idx = universe[(universe & bit) != 0]
        out[idx] |= out[idx ^ bit]
    return out


def _subset_and(flags: np.ndarray, n_atoms: int) -> np.ndarray:
    """``out[b] = all(flags[c] for c <= b)``."""
    out = flags.copy()
    universe = np.arange(flags.shape[0], dtype=np.int64)
    for i in range(n_atoms):
        bit = np.int64(1 << i)
        idx = universe[(universe & bit) != 0]
        out[idx] &= out[idx ^ bit]
    return out


def quantifier_simplified_numpy(n_atoms: int, masks: np.ndarray, coeffs: np.ndarray) -> bool:
    s = subset_sums_numpy(n_atoms, masks, coeffs)
    good = np.asarray(s >= 0, dtype=bool)
    good[0] = False
    return bool(_superset_or(good, n_atoms)[1:].all())


def quantifier_original_numpy(n_atoms: int, masks: np.ndarray, coeffs: np.ndarray) -> bool:
    s = subset_sums_numpy(n_atoms, masks, coeffs)
    nonneg = np.asarray(s >= 0, dtype=bool)
    nonneg[0] = True
    good = _subset_and(nonneg, n_atoms)
    good[0] = False
    return bool(_superset_or(good, n_atoms)[1:].all())


_KERNELS = {
    ("simplified", "numba"): quantifier_simplified_loop,
    ("original", "numba"): quantifier_original_loop,
    ("simplified", "numpy"): quantifier_simplified_numpy,
    ("original", "numpy"): quantifier_original_numpy,
}


def default_backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def quantifier_check(
    n_atoms: int,
    masks: Sequence[int],
    coeffs: Sequence[Fraction],
    form: str = "simplified",
    backend: str | None = None,
) -> bool:
    if n_atoms > config.KERNEL_HARD_MAX_ATOMS:
        raise ValueError(f"bitmask kernels support at most {config.KERNEL_HARD_MAX_ATOMS} atoms")
    backend = backend or default_backend()
    if (form, backend) not in _KERNELS:
        raise ValueError(f"unknown kernel {form!r}/{backend!r}")
    mask_arr = np.array(list(masks), dtype=np.int64)
    coeff_arr = scale_coefficients(coeffs)
    if coeff_arr.dtype == object:
        backend = "numpy"
    if mask_arr.shape[0] == 0:
        mask_arr = np.zeros(0, dtype=np.int64)
        coeff_arr = np.zeros(0, dtype=np.int64)
    return bool(_KERNELS[form, backend](n_atoms, mask_arr, coeff_arr))
